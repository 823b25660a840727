"""Exact construction of plane quartics with prescribed Galois action on
their 28 bitangents, built from Cayley octads of the form
(1 : x : x^2 : x^4) over the roots of a trace-zero degree-8 polynomial.

The package is organised as follows:

``fields``      exact field contexts (Q, GF(p), GF(p)(t), GF(p^d)) and
                raw-element arithmetic,
``poly``        dense univariate polynomials over any field context,
``factor``      squarefree / distinct-degree / equal-degree factorisation
                over finite fields, root finding, subfield embeddings,
``linalg``      exact matrices, fraction-free determinants, kernels,
``octad``       trace normalisation, the nonsingularity certificate, the
                net of quadrics through the octad, and its determinantal
                ternary quartic,
``bitangents``  splitting data, the 28 pair bitangents, perfect-square
                verification and Frobenius orbit reports,
``dual``        bitangents of an arbitrary smooth quartic over a finite
                field (the independent cross-check path),
``perms``       permutation groups, Schreier-Sims, the 2-set action and
                the symplectic model of Sp6(F2),
``twist``       exceptional-curve branch structure of lambda * w^2 = q,
``cli``         the command-line front end.
"""

from octad.fields import RationalField, PrimeField, FunctionField, extension_field
from octad.poly import UniPoly
from octad.octad import (
    OctadSpec,
    normalize_trace,
    certify_octad,
    build_net,
    net_kernel_oracle,
    det_quartic,
    smooth_bruteforce,
)

__all__ = [
    "RationalField",
    "PrimeField",
    "FunctionField",
    "extension_field",
    "UniPoly",
    "OctadSpec",
    "normalize_trace",
    "certify_octad",
    "build_net",
    "net_kernel_oracle",
    "det_quartic",
    "smooth_bruteforce",
]
