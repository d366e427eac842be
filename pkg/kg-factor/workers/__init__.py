from .scan_worker import ScanWorker, ScanWorkerConfig

__all__ = ["ScanWorker", "ScanWorkerConfig"]
