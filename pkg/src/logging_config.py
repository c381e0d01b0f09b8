"""
Logging configuration for the certification tools.

This module sets up logging with:
- A console handler on stderr (stdout carries certificates and CSV)
- Optional rotating file logs (app.log, error.log)
- Optional JSON format for file logs
- Helpers to time whole operations and bracket multi-step blocks
"""

import functools
import json
import logging
import logging.handlers
import sys
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict

ROOT_LOGGER = "fermat5"

# Extra fields copied into JSON records when a call site passes them.
_EXTRA_FIELDS = ("t", "prime", "height", "duration_ms", "operation")


class JSONFormatter(logging.Formatter):
    """
    Formatter that outputs one JSON object per record.

    Keeps records machine-readable for log aggregation and lets a sweep
    over many parameters be filtered by ``t`` afterwards.
    """

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON."""
        log_data: Dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for name in _EXTRA_FIELDS:
            if hasattr(record, name):
                log_data[name] = getattr(record, name)

        return json.dumps(log_data)


def setup_logging(
    log_level: str = "INFO",
    log_dir: str = "logs",
    enable_console: bool = True,
    enable_file: bool = False,
    json_format: bool = False
) -> logging.Logger:
    """
    Configure application-wide logging.

    Args:
        log_level: Minimum log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_dir: Directory for log files (created if doesn't exist)
        enable_console: Whether to log to stderr
        enable_file: Whether to log to rotating files
        json_format: Use JSON format for file logs

    Returns:
        Configured logger instance

    Example:
        >>> logger = setup_logging(log_level="DEBUG", json_format=True)
        >>> logger.info("Certification started")
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(getattr(logging, log_level.upper()))

    # Remove existing handlers (prevent duplicate logs)
    logger.handlers.clear()

    if enable_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(getattr(logging, log_level.upper()))
        console_format = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        console_handler.setFormatter(console_format)
        logger.addHandler(console_handler)

    if enable_file:
        Path(log_dir).mkdir(parents=True, exist_ok=True)

        format_str = (
            '%(asctime)s - %(name)s - %(levelname)s - '
            '%(module)s:%(funcName)s:%(lineno)d - %(message)s'
        )
        file_format: logging.Formatter = (
            JSONFormatter() if json_format
            else logging.Formatter(format_str, datefmt='%Y-%m-%d %H:%M:%S')
        )

        # Main log rotates at 10MB, keeps 5 backups
        file_handler = logging.handlers.RotatingFileHandler(
            filename=str(Path(log_dir) / "app.log"),
            maxBytes=10 * 1024 * 1024,
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(file_format)
        logger.addHandler(file_handler)

        error_handler = logging.handlers.RotatingFileHandler(
            filename=str(Path(log_dir) / "error.log"),
            maxBytes=10 * 1024 * 1024,
            backupCount=5,
            encoding='utf-8'
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(file_format)
        logger.addHandler(error_handler)

    logger.debug(
        f"Logging configured: level={log_level}, console={enable_console}, "
        f"file={enable_file}, json={json_format}"
    )

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance for a specific module.

    Args:
        name: Logger name (typically __name__ of the module)

    Returns:
        Logger instance under the application root
    """
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def log_performance(logger: logging.Logger):
    """
    Decorator to log function execution time.

    Example:
        >>> logger = get_logger(__name__)
        >>> @log_performance(logger)
        ... def certify(t):
        ...     ...
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()

            try:
                result = func(*args, **kwargs)
            except Exception as e:
                duration_ms = (time.perf_counter() - start_time) * 1000
                logger.error(
                    f"{func.__name__} failed: {e}",
                    extra={"duration_ms": duration_ms, "operation": func.__name__},
                )
                raise

            duration_ms = (time.perf_counter() - start_time) * 1000
            logger.debug(
                f"{func.__name__} completed in {duration_ms:.1f} ms",
                extra={"duration_ms": duration_ms, "operation": func.__name__}
            )
            return result

        return wrapper
    return decorator


class LogContext:
    """
    Context manager for logging operation blocks.

    Example:
        >>> logger = get_logger(__name__)
        >>> with LogContext(logger, "Certify parameter", t="5/2"):
        ...     certificate = service.certify("5/2")
    """

    def __init__(self, logger: logging.Logger, operation: str, **kwargs):
        """
        Initialize log context.

        Args:
            logger: Logger instance
            operation: Description of the operation
            **kwargs: Additional context fields (e.g. t, height)
        """
        self.logger = logger
        self.operation = operation
        self.context = kwargs
        self.start_time = 0.0

    def __enter__(self):
        """Log operation start."""
        self.start_time = time.perf_counter()
        self.logger.debug(f"Starting: {self.operation}", extra=self.context)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Log operation completion."""
        duration_ms = (time.perf_counter() - self.start_time) * 1000

        if exc_type is None:
            self.logger.info(
                f"Completed: {self.operation} ({duration_ms:.1f} ms)",
                extra={**self.context, "duration_ms": duration_ms}
            )
        else:
            self.logger.error(
                f"Failed: {self.operation} - {exc_val}",
                extra={**self.context, "duration_ms": duration_ms}
            )

        return False  # Don't suppress exceptions
