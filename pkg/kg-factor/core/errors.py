from typing import Optional


class KGFactorError(Exception):
    pass


class ConfigurationError(KGFactorError):
    pass


class GridMismatchError(KGFactorError):
    pass


class NonFiniteFieldError(KGFactorError):
    pass


class DivergenceError(KGFactorError):
    def __init__(self, step_index: int, message: Optional[str] = None):
        self.step_index = step_index
        super().__init__(message or f"Non-finite state produced at step {step_index}")


class EvanescentContentError(KGFactorError):
    pass


class EvanescentBinError(KGFactorError):
    pass


class UndefinedRatioError(KGFactorError):
    pass


class ValidityThresholdError(KGFactorError):
    def __init__(self, step_index: int, ratio: float, threshold: float):
        self.step_index = step_index
        self.ratio = ratio
        self.threshold = threshold
        super().__init__(f"Validity ratio {ratio:.3e} reached threshold {threshold:.3e} at step {step_index}")


class InsufficientSamplesError(KGFactorError):
    pass


class DegenerateScanError(KGFactorError):
    pass
