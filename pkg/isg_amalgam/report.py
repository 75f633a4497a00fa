"""
Command reports: human readable text plus a JSON document validated by
pydantic models, serialized with msgpack for binary dumps.
"""

from typing import Any, Dict, List, Optional

import msgpack
from pydantic import BaseModel

from .words import format_relator

SCHEMA_VERSION = '1.0'


class ComponentModel(BaseModel):
    k: int
    q: int
    vertices: List[str]
    edges: List[int]
    tree: List[int]


class DecompositionModel(BaseModel):
    left: List[int]
    right: List[int]
    components: List[ComponentModel]
    p: int
    k0_rank: int
    k1_rank: int
    display: str
    unital: bool = False


class BatchModel(BaseModel):
    reports: List[DecompositionModel]


class NormalFormModel(BaseModel):
    component: int
    row: int
    word: str
    col: int
    display: str


class EnumerationModel(BaseModel):
    size: int
    isomorphic: bool
    labels: List[str]


class AbelianizationModel(BaseModel):
    free_rank: int
    torsion: List[int]
    relation_matrix: List[List[int]]
    display: str


class PresentationModel(BaseModel):
    generators: List[str]
    relators: List[str]
    display: str
    abelianization: AbelianizationModel


class CheckModel(BaseModel):
    size: int
    zero: Optional[int] = None
    identity: Optional[int] = None
    idempotents: List[int]
    inverses: List[int]
    d_classes: List[List[int]]
    sigma_classes: List[List[int]]
    e_unitary: bool
    zero_e_star_unitary: Optional[bool] = None


class ValueModel(BaseModel):
    """Single computed value and a few named facts about it."""

    value: str
    details: Dict[str, Any] = {}


class ErrorModel(BaseModel):
    kind: str
    message: str
    exit_code: int


class Document(BaseModel):
    schema_version: str = SCHEMA_VERSION
    command: str
    result: Optional[Dict[str, Any]] = None
    error: Optional[ErrorModel] = None


def report_schema():
    """JSON schema shipped for the `--json` output."""

    return Document.model_json_schema()


class Report(object):
    """Outcome of one command."""

    def __init__(self, command, text, result=None, error=None, exit_code=0):

        self.command = command
        self.text = text
        self.result = result
        self.error = error
        self.exit_code = exit_code

    @classmethod
    def failure(cls, command, error):

        model = ErrorModel(kind=type(error).__name__, message=str(error),
                           exit_code=error.exit_code)
        return cls(command, 'error: %s\n' % error, error=model,
                   exit_code=error.exit_code)

    @property
    def document(self):

        result = None
        if self.result is not None:
            result = self.result.model_dump(mode='json')
        return Document(command=self.command, result=result, error=self.error)

    def to_json(self):

        return self.document.model_dump_json(indent=2) + '\n'

    def to_msgpack(self):

        return msgpack.packb(self.document.model_dump(mode='json'),
                             use_bin_type=True)


def load_json(text):

    return Document.model_validate_json(text)


def load_msgpack(data):

    return Document.model_validate(msgpack.unpackb(data, raw=False))


# Builders from domain values.

def decomposition_model(report):

    return DecompositionModel(**report.as_dict())


def abelianization_model(invariants):

    return AbelianizationModel(
        free_rank=invariants.free_rank,
        torsion=list(invariants.torsion),
        relation_matrix=[list(row) for row in invariants.matrix],
        display=str(invariants))


def presentation_model(presentation):

    return PresentationModel(
        generators=presentation.generators,
        relators=[format_relator(relator, presentation.alphabet)
                  for relator in presentation.relators],
        display=str(presentation),
        abelianization=abelianization_model(presentation.abelianization()))
