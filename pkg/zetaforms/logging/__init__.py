from zetaforms.logging.logger import Colors, GlobalLogger, Logger

__all__ = ["Colors", "GlobalLogger", "Logger"]
