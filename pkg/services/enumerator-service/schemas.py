"""
schemas.py
Poset documents: JSON {"n": 4, "name": "K22", "relations": [[1,3],[1,4],[2,3],[2,4]]}
or the one-line form "4: 1<3 1<4 2<3 2<4"
"""

import json
import re
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.errors import EnumeratorError
from core.poset import Poset, covers, poset_from_relations


class DocumentError(EnumeratorError):
    """Input text is neither a poset JSON document nor the one-line form"""


class PosetDocument(BaseModel):
    """Relations need not be covers or closed; closure is applied on load"""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(ge=0)
    name: Optional[str] = None
    relations: List[Tuple[int, int]] = Field(default_factory=list)

    @field_validator("relations")
    @classmethod
    def _no_self_relations(cls, relations: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        for i, j in relations:
            if i == j:
                raise ValueError(f"relation {i}<{j} relates an element to itself")
        return relations

    def to_poset(self) -> Poset:
        """CycleError on cycles, IndexError on labels outside 1..n"""
        return poset_from_relations(self.n, self.relations)

    @classmethod
    def from_poset(cls, P: Poset, name: Optional[str] = None) -> "PosetDocument":
        return cls(n=P.n, name=name, relations=sorted(covers(P)))

    def to_json(self) -> str:
        return json.dumps(self.model_dump(exclude_none=True), separators=(", ", ": "))

    def to_dsl(self) -> str:
        rels = " ".join(f"{i}<{j}" for i, j in self.relations)
        return f"{self.n}: {rels}".rstrip()


_DSL = re.compile(r"^\s*(\d+)\s*:(.*)$")
_PAIR = re.compile(r"^(\d+)<(\d+)$")


def parse_dsl(text: str) -> PosetDocument:
    match = _DSL.match(text.strip())
    if not match:
        raise DocumentError(f"expected 'n: i<j ...', got {text.strip()!r}")
    relations = []
    for token in match.group(2).split():
        pair = _PAIR.match(token)
        if not pair:
            raise DocumentError(f"bad relation token {token!r}")
        relations.append((int(pair.group(1)), int(pair.group(2))))
    try:
        return PosetDocument(n=int(match.group(1)), relations=relations)
    except ValidationError as exc:
        raise DocumentError(str(exc)) from exc


def parse_document(text: str) -> PosetDocument:
    """JSON document or one-line form; DocumentError on malformed text"""
    stripped = text.strip()
    if not stripped:
        raise DocumentError("empty input")
    if stripped.startswith("{"):
        try:
            return PosetDocument.model_validate_json(stripped)
        except ValidationError as exc:
            raise DocumentError(str(exc)) from exc
    return parse_dsl(stripped)


def load_poset(text: str) -> Tuple[Poset, PosetDocument]:
    document = parse_document(text)
    return document.to_poset(), document
