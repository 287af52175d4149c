import logging
import sys
import traceback
from functools import wraps
from typing import Any, Callable, Optional, Dict
from dataclasses import dataclass
from enum import Enum


class ErrorSeverity(Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


@dataclass
class TuranError:
    """Structured error information"""
    code: str
    message: str
    severity: ErrorSeverity
    component: str
    details: Optional[Dict] = None
    exit_code: int = 1


class WeightedTuranException(Exception):
    """Base exception for every library and CLI failure"""

    code = "ERROR"
    severity = ErrorSeverity.HIGH
    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict] = None,
                 component: str = "core", original_exception: Exception = None):
        self.error = TuranError(
            code=self.code,
            message=message,
            severity=self.severity,
            component=component,
            details=details,
            exit_code=self.exit_code,
        )
        self.original_exception = original_exception
        super().__init__(message)


class InputParseError(WeightedTuranException):
    """Malformed graph, weight or pattern text"""
    code = "PARSE_ERROR"
    severity = ErrorSeverity.MEDIUM
    exit_code = 2


class InvalidArgument(WeightedTuranException, ValueError):
    code = "INVALID_ARGUMENT"
    severity = ErrorSeverity.MEDIUM
    exit_code = 2


class GraphValidationError(WeightedTuranException, ValueError):
    """A value type was built with data that breaks its invariants"""
    code = "INVALID_GRAPH"
    severity = ErrorSeverity.MEDIUM
    exit_code = 2


class EmptyWeights(WeightedTuranException, ValueError):
    code = "EMPTY_WEIGHTS"
    severity = ErrorSeverity.MEDIUM
    exit_code = 2


class BipartitePattern(WeightedTuranException, ValueError):
    """The forbidden graph has chromatic number at most 2"""
    code = "BIPARTITE_PATTERN"
    severity = ErrorSeverity.MEDIUM
    exit_code = 2


class TooLarge(WeightedTuranException):
    """Input exceeds an exhaustive-search cap"""
    code = "TOO_LARGE"
    severity = ErrorSeverity.HIGH
    exit_code = 3


class PatternTooLarge(TooLarge):
    code = "PATTERN_TOO_LARGE"


class CliquePresent(WeightedTuranException):
    """The input graph contains the clique the operation requires it to avoid"""
    code = "CLIQUE_PRESENT"
    severity = ErrorSeverity.HIGH
    exit_code = 4


class StabilityBoundViolated(WeightedTuranException):
    code = "STABILITY_VIOLATION"
    severity = ErrorSeverity.CRITICAL
    exit_code = 1


class ErrorHandler:
    """Centralized error logging"""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger(__name__)

    def handle_error(self, error: TuranError, exception: Exception = None) -> None:
        """Log an error at the level matching its severity"""
        log_message = f"[{error.component}] {error.code}: {error.message}"

        if error.details:
            log_message += f" | Details: {error.details}"

        if exception:
            log_message += f" | Original: {str(exception)}"

        if error.severity == ErrorSeverity.CRITICAL:
            self.logger.critical(log_message)
            if exception:
                self.logger.critical(traceback.format_exc())
        elif error.severity == ErrorSeverity.HIGH:
            self.logger.error(log_message)
        elif error.severity == ErrorSeverity.MEDIUM:
            self.logger.warning(log_message)
        else:
            self.logger.info(log_message)

    def create_error(self, code: str, message: str, severity: ErrorSeverity,
                     component: str, **kwargs) -> TuranError:
        """Create a structured error"""
        return TuranError(
            code=code,
            message=message,
            severity=severity,
            component=component,
            details=kwargs.get('details'),
            exit_code=kwargs.get('exit_code', 1),
        )


def handle_command_errors(component: str):
    """Decorator turning exceptions raised by a CLI command into exit codes.

    The wrapped function returns an int exit code; on failure the message goes
    to stderr and the code comes from the exception class.
    """
    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            try:
                return func(*args, **kwargs)

            except WeightedTuranException as e:
                e.error.component = component
                error_handler.handle_error(e.error)
                print(f"error: {e.error.message}", file=sys.stderr)
                return e.error.exit_code

            except FileNotFoundError as e:
                error = error_handler.create_error(
                    code="FILE_NOT_FOUND",
                    message=f"File not found: {e.filename or e}",
                    severity=ErrorSeverity.HIGH,
                    component=component,
                    exit_code=2,
                )
                error_handler.handle_error(error)
                print(f"error: {error.message}", file=sys.stderr)
                return error.exit_code

            except Exception as e:
                error = error_handler.create_error(
                    code="UNEXPECTED_ERROR",
                    message=f"Unexpected error in {component}: {str(e)}",
                    severity=ErrorSeverity.CRITICAL,
                    component=component,
                    details={"exception_type": type(e).__name__},
                )
                error_handler.handle_error(error, e)
                print(f"error: {error.message}", file=sys.stderr)
                return error.exit_code

        return wrapper
    return decorator


# Global error handler instance
error_handler = ErrorHandler()
