from zetaforms.options.numerics import NumericsOptions

__all__ = ["NumericsOptions"]
