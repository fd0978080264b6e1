from zetaforms.registrar.registrar import Registrar

__all__ = ["Registrar"]
