"""Case handler registry.

A handler is called as ``handler(chart, expansion, *, hints=..., settings=...)``
and returns a certificate without origin; the classifier fills that in.
"""

from typing import Any, Callable, TypeAlias

HandlerFn: TypeAlias = Callable[..., Any]

_HANDLER_REGISTRY: dict[int, HandlerFn] = {}


def register_handler(*cases: int):
    """Decorator to register a handler for one or more case tags.

    A case can only have one handler.
    """

    def wrapper(fn: HandlerFn) -> HandlerFn:
        for case in cases:
            if case in _HANDLER_REGISTRY:
                existing = _HANDLER_REGISTRY[case].__name__
                raise ValueError(
                    f"Handler already registered for case {case}. "
                    f"Existing handler: {existing}, "
                    f"attempted new handler: {fn.__name__}"
                )
            _HANDLER_REGISTRY[case] = fn
        return fn

    return wrapper


def get_handler(case: int) -> HandlerFn:
    """Get handler from registry."""
    if case not in _HANDLER_REGISTRY:
        raise KeyError(f"No handler registered for case {case}")
    return _HANDLER_REGISTRY[case]


def registered_cases() -> list[int]:
    """Cases with a handler."""
    return sorted(_HANDLER_REGISTRY)
