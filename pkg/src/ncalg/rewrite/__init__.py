from .system import (DegreeBoundError, ReductionSystem, Rule, complete, overlap_ambiguities,
                     resolve_ambiguity)

__all__ = ["DegreeBoundError", "ReductionSystem", "Rule", "complete", "overlap_ambiguities",
           "resolve_ambiguity"]
