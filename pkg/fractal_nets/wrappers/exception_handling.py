import logging

from fractal_nets.utils.exceptions import FractalNetsError, GenerationError, InvalidParameterError

logger = logging.getLogger(__name__)


class ExceptionHandling:
    """Wraps a model generator so that failures report the offending seed.

    Args:
        generate (callable): Generator taking keyword parameters and seed.

    """

    def __init__(self, generate):
        self.generate = generate

    def __call__(self, seed, **params):
        try:
            return self.generate(seed=seed, **params)
        except InvalidParameterError:
            raise
        except (FractalNetsError, ArithmeticError, ValueError, MemoryError) as e:
            logger.error("Generation failed for seed %d: %s", seed, e)
            raise GenerationError(seed, e) from e
