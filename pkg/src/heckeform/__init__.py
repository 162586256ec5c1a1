"""Exact Specht-module forms and unitarity scans for type A Hecke algebras."""

from .combinat import MultiPartition, Partition, Permutation, Tableau
from .cyclo import CycloNum, RationalC, SignCert, sign_of_real, smallest_e, specialize
from .laurent import LaurentPoly, QqFraction, cyclotomic_root_multiplicities
from .specht import (AlgebraSpec, HermitianGram, JantzenReport, SpechtData,
                     build_specht, gram_determinant, hermitian_gram,
                     jantzen_layers, sigma_on_module)
from .unitarity import (LocusDescription, ScanReport, UnitarityVerdict,
                        predicted_locus, scan_locus, signature, singular_points,
                        verdict, verify_classification)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "CycloNum", "HermitianGram", "JantzenReport", "LaurentPoly",
    "LocusDescription", "MultiPartition", "Partition", "Permutation", "QqFraction",
    "RationalC", "ScanReport", "SignCert", "SpechtData", "Tableau",
    "UnitarityVerdict", "build_specht", "cyclotomic_root_multiplicities",
    "gram_determinant", "hermitian_gram", "jantzen_layers", "predicted_locus",
    "scan_locus", "sigma_on_module", "sign_of_real", "signature",
    "singular_points", "smallest_e", "specialize", "verdict",
    "verify_classification",
]
