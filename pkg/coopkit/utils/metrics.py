"""
Prometheus metrics for coopkit runs
"""
import time
from functools import wraps
from pathlib import Path
from typing import Callable, Optional

from loguru import logger
from prometheus_client import CollectorRegistry, Counter, Histogram, Info, generate_latest

from coopkit import __version__

# Private registry so library use never touches the global default registry
coopkit_registry = CollectorRegistry()

coopkit_info = Info(
    'coopkit',
    'Information about the coopkit build',
    registry=coopkit_registry
)

proofs_checked_total = Counter(
    'coopkit_proofs_checked_total',
    'Proofs checked by the kernel',
    ['logic', 'verdict'],
    registry=coopkit_registry
)

law_checks_total = Counter(
    'coopkit_law_checks_total',
    'Law suites run against a model',
    ['mode', 'verdict'],
    registry=coopkit_registry
)

countermodel_searches_total = Counter(
    'coopkit_countermodel_searches_total',
    'Countermodel searches',
    ['algebra_class', 'outcome'],
    registry=coopkit_registry
)

decisions_total = Counter(
    'coopkit_decisions_total',
    'Decision procedure runs',
    ['ambient', 'verdict'],
    registry=coopkit_registry
)

chains_verified_total = Counter(
    'coopkit_chains_verified_total',
    'Equational chains verified',
    ['verdict'],
    registry=coopkit_registry
)

lp_checks_total = Counter(
    'coopkit_lp_feasibility_checks_total',
    'Fourier-Motzkin feasibility checks',
    ['result'],
    registry=coopkit_registry
)

errors_total = Counter(
    'coopkit_errors_total',
    'Errors raised by operations',
    ['error_type', 'component'],
    registry=coopkit_registry
)

operation_duration_seconds = Histogram(
    'coopkit_operation_duration_seconds',
    'Operation duration in seconds',
    ['operation'],
    registry=coopkit_registry
)


class MetricsCollector:
    """Centralized metrics collection"""

    def __init__(self):
        self.start_time = time.time()
        coopkit_info.info({'version': __version__})

    def record_proof_check(self, logic: str, ok: bool):
        proofs_checked_total.labels(logic=logic, verdict='ok' if ok else 'failed').inc()

    def record_law_check(self, mode: str, ok: bool):
        law_checks_total.labels(mode=mode, verdict='pass' if ok else 'fail').inc()

    def record_countermodel_search(self, algebra_class: str, found: bool):
        countermodel_searches_total.labels(
            algebra_class=algebra_class, outcome='found' if found else 'exhausted'
        ).inc()

    def record_decision(self, ambient: str, valid: bool):
        decisions_total.labels(ambient=ambient, verdict='valid' if valid else 'countermodel').inc()

    def record_chain_verification(self, ok: bool):
        chains_verified_total.labels(verdict='ok' if ok else 'rejected').inc()

    def record_lp_check(self, feasible: bool):
        lp_checks_total.labels(result='feasible' if feasible else 'infeasible').inc()

    def record_error(self, error_type: str, component: str):
        errors_total.labels(error_type=error_type, component=component).inc()

    def get_metrics(self) -> str:
        """Get all metrics in Prometheus text format"""
        return generate_latest(coopkit_registry).decode('utf-8')

    def write(self, path: Optional[str]):
        """Write the registry to a textfile-collector file"""
        if not path:
            return
        Path(path).write_text(self.get_metrics(), encoding='utf-8')
        logger.debug(f"Metrics written to {path}")


# Global metrics collector instance
metrics = MetricsCollector()


def track_duration(operation: str, component: Optional[str] = None):
    """Decorator to time an operation and count the errors it raises"""
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            try:
                return func(*args, **kwargs)
            except Exception as e:
                metrics.record_error(type(e).__name__, component or operation)
                raise
            finally:
                operation_duration_seconds.labels(operation=operation).observe(
                    time.perf_counter() - start_time
                )
        return wrapper
    return decorator
