"""Reed-Solomon coding with fast generalized-minimum-distance decoding."""

from .eea import (
    CLASSICAL_SOLVED,
    EXHAUSTED,
    PARTIAL_QUOTIENT,
    BasisPair,
    EeaTrace,
    classical_decode,
    eea_run,
    erasure_requirement,
    extract_basis,
)
from .fia import EvalMatrix, FiaResult, assemble_locator, build_matrix, fia_run
from .gf import GF
from .gmd import Candidate, DecoderOutput, ReliabilityOrder, gmd_decode, validate_candidate
from .poly import Poly, dft, idft
from .rs import CodeParams, encode, is_codeword, reconstruct_error, syndrome

__all__ = [
    "GF",
    "Poly",
    "dft",
    "idft",
    "CodeParams",
    "encode",
    "syndrome",
    "is_codeword",
    "reconstruct_error",
    "eea_run",
    "classical_decode",
    "extract_basis",
    "erasure_requirement",
    "EeaTrace",
    "BasisPair",
    "CLASSICAL_SOLVED",
    "EXHAUSTED",
    "PARTIAL_QUOTIENT",
    "EvalMatrix",
    "FiaResult",
    "build_matrix",
    "fia_run",
    "assemble_locator",
    "ReliabilityOrder",
    "Candidate",
    "DecoderOutput",
    "gmd_decode",
    "validate_candidate",
]

__version__ = "0.1.0"
