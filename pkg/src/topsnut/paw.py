"""The TB-paw value type: a token sequence and its digit-string rendering."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

Token = Union[int, frozenset]


def render_token(tok: Token) -> str:
    """Decimal, no padding; a set renders as its members in ascending order."""
    if isinstance(tok, (set, frozenset)):
        return "".join(str(x) for x in sorted(tok))
    return str(tok)


@dataclass(frozen=True)
class TbPaw:
    tokens: tuple[Token, ...]
    provenance: dict = field(default_factory=dict, compare=False)

    @classmethod
    def of(cls, tokens: Iterable[Token], **provenance) -> "TbPaw":
        return cls(tuple(tokens), provenance)

    @property
    def rendered(self) -> str:
        return "".join(render_token(t) for t in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return self.rendered

    def uplus(self, other: "TbPaw") -> "TbPaw":
        """Concatenation, written ⊎ in the literature."""
        return TbPaw(self.tokens + other.tokens, {"uplus": [self.provenance, other.provenance]})

    __add__ = uplus

    def reciprocal(self) -> "TbPaw":
        return TbPaw(self.tokens[::-1], {"reciprocal": self.provenance})

    def reversed_text(self) -> str:
        """Character-level reverse of the rendered string."""
        return self.rendered[::-1]


def uplus_all(paws: Iterable[TbPaw]) -> TbPaw:
    paws = list(paws)
    tokens: tuple[Token, ...] = ()
    for p in paws:
        tokens += p.tokens
    return TbPaw(tokens, {"uplus": [p.provenance for p in paws]})
