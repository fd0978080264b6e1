from zetaforms.integrations.cli import CLI, main

__all__ = ["CLI", "main"]
