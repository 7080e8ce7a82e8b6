class FractalNetsError(Exception):
    def __init__(self, message = "fractal-nets error."):
        super().__init__(message)
        self.message = message
    def __str__(self):
        return self.message

class InvalidParameterError(FractalNetsError):
    def __init__(self, message = "Invalid parameter."):
        super().__init__(message)

class DisconnectedGraphError(FractalNetsError):
    def __init__(self, message = "The graph is not connected."):
        super().__init__(message)

class UndefinedMetricError(FractalNetsError):
    def __init__(self, message = "The metric is undefined for this graph."):
        super().__init__(message)

class InsufficientDataError(FractalNetsError):
    def __init__(self, message = "Not enough points to fit the curve."):
        super().__init__(message)

class SizeLimitError(FractalNetsError):
    def __init__(self, message = "The graph is too large for the exact box-covering search."):
        super().__init__(message)

class ConvergenceError(FractalNetsError):
    def __init__(self, iterations):
        super().__init__("Power iteration did not converge after %d iterations." % iterations)
        self.args = (iterations,)
        self.iterations = iterations

class GenerationError(FractalNetsError):
    def __init__(self, seed, reason):
        super().__init__("Graph generation failed for seed %d: %s" % (seed, reason))
        self.args = (seed, reason)
        self.seed = seed
        self.reason = reason

class OutputError(FractalNetsError):
    def __init__(self, path, reason):
        super().__init__("Cannot write %s: %s" % (path, reason))
        self.args = (path, reason)
        self.path = path

class UsageError(FractalNetsError):
    def __init__(self, message = "Invalid command line."):
        super().__init__(message)
