import importlib
import logging
from dataclasses import dataclass

from fractal_nets.utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelEntry:
    """A registered graph model.

    Args:
        id (str): Model id, e.g. 'RBFM-v0'.
        entry_point (str): 'module:function' of the generator.
        kind (str): ModelSpec kind handled by the generator.

    """
    id: str
    entry_point: str
    kind: str

    def load(self):
        module_name, _, attr = self.entry_point.partition(':')
        return getattr(importlib.import_module(module_name), attr)


registry = {}


def register(id, entry_point, kind):
    if id in registry:
        raise InvalidParameterError("Model id %s is already registered." % id)
    registry[id] = ModelEntry(id=id, entry_point=entry_point, kind=kind)


def spec(id):
    try:
        return registry[id]
    except KeyError:
        raise InvalidParameterError("No model registered with id %s." % id)


def id_for_kind(kind):
    for entry in registry.values():
        if entry.kind == kind:
            return entry.id
    raise InvalidParameterError("No model registered for kind %s." % kind)


def make(id, **params):
    """Generate a graph with the registered model.

    Args:
        id (str): Registered model id.
        **params: Generator parameters (including seed).

    Returns:
        Graph: Generated graph.

    """

    generate = spec(id).load()
    logger.debug("Generating %s with %s", id, params)
    return generate(**params)
