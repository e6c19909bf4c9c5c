from .frobenius import FrobeniusData, NotFrobenius, check_frobenius, frobenius_data
from .keller import canonical_span, keller_relations, relations_match
from .merkulov import MerkulovModel, merkulov_model
from .structure import (AInfStructure, BasisElement, MissingEntry, check_stasheff, forced_vanishing,
                        read_tables, write_tables)

__all__ = [
    "FrobeniusData", "NotFrobenius", "check_frobenius", "frobenius_data",
    "canonical_span", "keller_relations", "relations_match",
    "MerkulovModel", "merkulov_model",
    "AInfStructure", "BasisElement", "MissingEntry", "check_stasheff", "forced_vanishing",
    "read_tables", "write_tables",
]
