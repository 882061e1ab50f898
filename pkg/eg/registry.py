"""Class IRI -> entity dataclass, filled by ``@register`` in eg.model."""

from __future__ import annotations

from typing import Callable, ClassVar, Protocol, TypeVar


class Entity(Protocol):
    CLASS_IRI: ClassVar[str]

    @classmethod
    def from_graph(cls, graph, node): ...

    def triples(self) -> list: ...


class NoTypedView(KeyError):
    def __str__(self) -> str:
        return str(self.args[0])


_views: dict[str, type] = {}

T = TypeVar("T", bound=type)


def register(class_iri: str) -> Callable[[T], T]:
    """Bind an entity class to ``class_iri`` and stamp it with ``CLASS_IRI``.

        @register(v.SKILL)
        class Skill: ...
    """
    def bind(cls: T) -> T:
        if class_iri in _views:
            raise ValueError(f"{class_iri} already registered to {_views[class_iri].__name__}")
        _views[class_iri] = cls
        cls.CLASS_IRI = class_iri  # type: ignore[attr-defined]
        return cls
    return bind


def get_entity(class_iri: str) -> type[Entity]:
    if class_iri not in _views:
        raise NoTypedView(f"No typed view for {class_iri} (known: {len(_views)} classes)")
    return _views[class_iri]


def available_classes() -> list[str]:
    return sorted(_views)
