"""Ontology, user goals, and the dialog data model.

All types are immutable after construction and safe to share across
parallel workers.
"""
from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

ABSENT = "none"
REQUEST_VALUE = "?"

USER = "user"
SYSTEM = "system"

_PUNCT = re.compile(r"([?,!;])")
_DOT = re.compile(r"(?<!\d)\.(?!\d)")
_COLON = re.compile(r"(?<!\d):(?!\d)")


class OntologyError(ValueError):
    """Raised when an ontology definition or reference is inconsistent."""


def tokenize(text: str) -> list[str]:
    """Lowercase, split punctuation off words, split on whitespace.

    Dots and colons between digits (times, long numbers) are kept inside
    their token so values like "21:45" stay atomic.
    """
    text = text.lower()
    text = _PUNCT.sub(r" \1 ", text)
    text = _DOT.sub(" . ", text)
    text = _COLON.sub(" : ", text)
    return text.split()


def detokenize(tokens: Iterable[str]) -> str:
    return " ".join(tokens)


def placeholder(domain: str, slot: str) -> str:
    return f"[{domain}_{slot}]".lower()


def parse_placeholder(token: str) -> tuple[str, str] | None:
    """Inverse of :func:`placeholder`; None if the token is not one."""
    if not (token.startswith("[") and token.endswith("]") and "_" in token):
        return None
    domain, _, slot = token[1:-1].partition("_")
    if not domain or not slot:
        return None
    return domain, slot


@dataclass(frozen=True)
class DomainSchema:
    """Informable slots with candidate value sets, plus requestable slots."""

    name: str
    informable: tuple[tuple[str, tuple[str, ...]], ...]  # (slot, candidate values)
    requestable: tuple[str, ...]
    entity_slot: str  # slot whose value names an offered entity (e.g. name, trainid)

    def values(self, slot: str) -> tuple[str, ...]:
        for s, vals in self.informable:
            if s == slot:
                return vals
        raise OntologyError(f"unknown informable slot {self.name}.{slot}")

    @property
    def informable_slots(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self.informable)


@dataclass(frozen=True)
class Ontology:
    """Domains, user intents, and the per-domain slot schema.

    The placeholder table maps every (domain, slot) pair that can appear
    delexicalized, including requestable slots and the booking reference,
    to its surface token.
    """

    domains: tuple[str, ...]
    user_intents: tuple[str, ...]
    schemas: tuple[DomainSchema, ...]
    placeholder_table: tuple[tuple[tuple[str, str], str], ...] = ()

    def __post_init__(self):
        if len(set(self.domains)) != len(self.domains):
            raise OntologyError("duplicate domain names")
        if tuple(s.name for s in self.schemas) != self.domains:
            raise OntologyError("schemas must align with the domain list")
        seen = set()
        for schema in self.schemas:
            for slot, values in schema.informable:
                if (schema.name, slot) in seen:
                    raise OntologyError(f"duplicate slot {schema.name}.{slot}")
                seen.add((schema.name, slot))
                if values.count(ABSENT) != 1:
                    raise OntologyError(
                        f"{schema.name}.{slot} needs exactly one '{ABSENT}' value"
                    )
                if len(set(values)) != len(values):
                    raise OntologyError(f"duplicate values in {schema.name}.{slot}")
        if not self.placeholder_table:
            object.__setattr__(self, "placeholder_table", self._default_placeholders())

    def _default_placeholders(self):
        table = []
        for schema in self.schemas:
            slots = list(schema.informable_slots) + list(schema.requestable)
            if "reference" not in slots:
                slots.append("reference")
            for slot in slots:
                table.append(((schema.name, slot), placeholder(schema.name, slot)))
        return tuple(table)

    # -- lookups -----------------------------------------------------------

    def schema(self, domain: str) -> DomainSchema:
        for s in self.schemas:
            if s.name == domain:
                return s
        raise OntologyError(f"unknown domain {domain!r}")

    @property
    def slot_ids(self) -> tuple[tuple[str, str], ...]:
        """All informable (domain, slot) pairs, in ontology order."""
        return tuple(
            (schema.name, slot)
            for schema in self.schemas
            for slot in schema.informable_slots
        )

    def values(self, domain: str, slot: str) -> tuple[str, ...]:
        return self.schema(domain).values(slot)

    def value_index(self, domain: str, slot: str, value: str) -> int:
        values = self.values(domain, slot)
        try:
            return values.index(value.lower())
        except ValueError:
            raise OntologyError(f"value {value!r} not in candidates of {domain}.{slot}")

    def absent_index(self, domain: str, slot: str) -> int:
        return self.values(domain, slot).index(ABSENT)

    def placeholder_for(self, domain: str, slot: str) -> str:
        for (d, s), token in self.placeholder_table:
            if d == domain and s == slot:
                return token
        raise OntologyError(f"no placeholder for {domain}.{slot}")

    def domain_vector(self, domains: Iterable[str]) -> list[int]:
        present = set(domains)
        return [1 if d in present else 0 for d in self.domains]

    def intent_vector(self, intents: Iterable[str]) -> list[int]:
        present = set(intents)
        return [1 if i in present else 0 for i in self.user_intents]

    def resolve_slot_name(self, name: str) -> tuple[tuple[str, str], ...]:
        """All (domain, slot) pairs whose slot matches ``name`` (case-folded).

        Used to map reward-criteria slot names onto ontology slots; both
        informable and requestable slots count.
        """
        name = name.lower()
        hits = []
        for schema in self.schemas:
            for slot in list(schema.informable_slots) + list(schema.requestable):
                if slot.lower() == name and (schema.name, slot) not in hits:
                    hits.append((schema.name, slot))
        return tuple(hits)

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "domains": list(self.domains),
            "user_intents": list(self.user_intents),
            "slots": {
                schema.name: {
                    "informable": {s: list(v) for s, v in schema.informable},
                    "requestable": list(schema.requestable),
                    "entity_slot": schema.entity_slot,
                }
                for schema in self.schemas
            },
            "placeholder_table": {
                f"{d}_{s}": token for (d, s), token in self.placeholder_table
            },
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Ontology":
        domains = tuple(data["domains"])
        schemas = []
        for domain in domains:
            spec = data["slots"][domain]
            schemas.append(
                DomainSchema(
                    name=domain,
                    informable=tuple(
                        (slot, tuple(values))
                        for slot, values in spec["informable"].items()
                    ),
                    requestable=tuple(spec["requestable"]),
                    entity_slot=spec["entity_slot"],
                )
            )
        table = ()
        if data.get("placeholder_table"):
            table = tuple(
                (tuple(key.split("_", 1)), token)
                for key, token in data["placeholder_table"].items()
            )
        return cls(
            domains=domains,
            user_intents=tuple(data["user_intents"]),
            schemas=tuple(schemas),
            placeholder_table=table,
        )

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")

    @classmethod
    def load(cls, path) -> "Ontology":
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))

    def content_hash(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class DomainGoal:
    """Constraints and requests for one domain of a user goal.

    ``info`` holds the constraints as first stated (possibly including a
    wrong value); ``fail_info`` holds the corrections the user reveals
    after the system reports no matching result.
    """

    info: tuple[tuple[str, str], ...]
    req: tuple[str, ...] = ()
    fail_info: tuple[tuple[str, str], ...] = ()
    book: bool = False

    @property
    def final_info(self) -> dict[str, str]:
        merged = dict(self.info)
        merged.update(dict(self.fail_info))
        return merged


@dataclass(frozen=True)
class UserGoal:
    domains: tuple[tuple[str, DomainGoal], ...]

    def __post_init__(self):
        for domain, goal in self.domains:
            info_slots = {s for s, _ in goal.info}
            if not set(s for s, _ in goal.fail_info) <= info_slots:
                raise OntologyError(f"fail_info slots not in inform slots ({domain})")

    def goal_for(self, domain: str) -> DomainGoal:
        return dict(self.domains)[domain]

    @property
    def domain_names(self) -> tuple[str, ...]:
        return tuple(d for d, _ in self.domains)

    def validate(self, ontology: Ontology):
        for domain, goal in self.domains:
            schema = ontology.schema(domain)
            for slot, value in list(goal.info) + list(goal.fail_info):
                ontology.value_index(domain, slot, value)
            known = set(schema.informable_slots) | set(schema.requestable) | {"reference"}
            for slot in goal.req:
                if slot not in known:
                    raise OntologyError(f"goal requests unknown slot {domain}.{slot}")

    def to_dict(self) -> dict:
        return {
            domain: {
                "info": dict(goal.info),
                "req": list(goal.req),
                "fail_info": dict(goal.fail_info),
                "book": goal.book,
            }
            for domain, goal in self.domains
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "UserGoal":
        return cls(
            domains=tuple(
                (
                    domain,
                    DomainGoal(
                        info=tuple(spec.get("info", {}).items()),
                        req=tuple(spec.get("req", ())),
                        fail_info=tuple(spec.get("fail_info", {}).items()),
                        book=bool(spec.get("book", False)),
                    ),
                )
                for domain, spec in data.items()
            )
        )


@dataclass(frozen=True)
class DialogAct:
    """(domain, intent, slot, value) semantic frame; requests carry "?"."""

    domain: str
    intent: str
    slot: str = ""
    value: str = ""
    side: str = USER

    def as_list(self) -> list[str]:
        return [self.domain, self.intent, self.slot, self.value]

    @classmethod
    def from_list(cls, quad: Sequence[str], side: str) -> "DialogAct":
        d, i, s, v = quad
        return cls(domain=d, intent=i, slot=s, value=v, side=side)


@dataclass(frozen=True)
class Turn:
    """One dialog turn: context pair, gold labels, and the response target.

    ``sys`` is the system utterance *preceding* the user turn (the empty
    sentinel on turn 0) and together with ``usr`` forms the encoder input
    pair. ``resp`` is the system response to this user turn; ``sys_acts``
    annotate it and ``delex_sys`` is its delexicalized form, the
    generation target. ``belief`` is the cumulative gold state after the
    user utterance, stored sparsely (absent slots omitted).
    """

    sys: str
    usr: str
    belief: tuple[tuple[tuple[str, str], str], ...]
    usr_acts: tuple[DialogAct, ...]
    sys_acts: tuple[DialogAct, ...]
    resp: str = ""
    delex_sys: str = ""

    @property
    def sys_tokens(self) -> list[str]:
        return tokenize(self.sys)

    @property
    def usr_tokens(self) -> list[str]:
        return tokenize(self.usr)

    def gold_domains(self) -> frozenset[str]:
        return frozenset(a.domain for a in self.usr_acts if a.domain)

    def gold_intents(self) -> frozenset[str]:
        return frozenset(a.intent for a in self.usr_acts if a.intent)

    def belief_value(self, domain: str, slot: str) -> str:
        for (d, s), v in self.belief:
            if d == domain and s == slot:
                return v
        return ABSENT

    def belief_indices(self, ontology: Ontology) -> list[int]:
        """Gold value index per informable slot, ontology order."""
        return [
            ontology.value_index(d, s, self.belief_value(d, s))
            for d, s in ontology.slot_ids
        ]


@dataclass(frozen=True)
class Dialog:
    dialog_id: str
    goal: UserGoal
    turns: tuple[Turn, ...]

    def validate(self, ontology: Ontology):
        self.goal.validate(ontology)
        if self.turns and self.turns[0].sys.strip() not in ("", "hello , how can i help you ?"):
            raise OntologyError(f"{self.dialog_id}: turn 0 must open with the greeting sentinel")
        for t, turn in enumerate(self.turns):
            for act in turn.usr_acts + turn.sys_acts:
                if act.domain and act.domain not in ontology.domains:
                    raise OntologyError(f"{self.dialog_id} turn {t}: unknown domain {act.domain}")
            for act in turn.usr_acts:
                if act.intent not in ontology.user_intents:
                    raise OntologyError(f"{self.dialog_id} turn {t}: unknown intent {act.intent}")
            for (d, s), v in turn.belief:
                ontology.value_index(d, s, v)
