import logging

# Shared logger instance
logger = None

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


class ConsoleColor:
    RESET = "\033[0m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    CYAN = "\033[36m"


class SuppressProgressFilter(logging.Filter):
    def filter(self, record):
        # Per-item worker failures are already summarised at the end of a batch
        return "Error in batch item:" not in record.getMessage()


def get_logger():
    """
    Returns the shared logger instance. If not initialized, returns a WARNING-level default logger.
    """
    global logger
    if logger is None:
        default_logger = logging.getLogger("tangentpsc")
        if not default_logger.handlers:  # Prevent adding multiple handlers
            default_logger.setLevel(logging.WARNING)
            console_handler = logging.StreamHandler()
            console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            default_logger.addHandler(console_handler)
        return default_logger
    return logger


def setup_logger(log_file: str = '', level: str = 'INFO'):
    """
    Initializes the shared logger instance.
    :param log_file: Optional log file path, empty string for console only
    :param level: The logging level name
    """
    global logger
    if logger is None:  # Only initialize once
        logger = logging.getLogger("tangentpsc.shared")
        logger.setLevel(getattr(logging, level.upper(), logging.INFO))
        logger.propagate = False

        console_handler = logging.StreamHandler()
        console_handler.setLevel(logger.level)
        console_handler.setFormatter(logging.Formatter('%(message)s'))
        console_handler.addFilter(SuppressProgressFilter())
        logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            logger.addHandler(file_handler)
    return logger
