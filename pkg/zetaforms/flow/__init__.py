from zetaforms.flow.parallel_list import ParallelList
from zetaforms.flow.sequence import Sequence

__all__ = ["ParallelList", "Sequence"]
