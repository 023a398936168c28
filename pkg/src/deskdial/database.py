"""Domain databases, belief-conditioned querying, and DB feature vectors."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ontology import ABSENT, Ontology

COUNT_BUCKETS = 5  # match-count buckets {0, 1, 2, 3, >=4}


class DatabaseError(KeyError):
    """Unknown domain or unsupported operation on a domain table."""


@dataclass(frozen=True)
class BookingResult:
    ok: bool
    reference: str = ""
    mismatched: tuple[str, ...] = ()


@dataclass(frozen=True)
class DomainDB:
    """Immutable per-domain record tables.

    Records are plain slot->value maps with a unique ``key`` primary key;
    booking references derive from a caller seed so sessions stay
    independent and reproducible.
    """

    tables: tuple[tuple[str, tuple[Mapping[str, str], ...]], ...]
    bookable: tuple[str, ...]
    availability_slots: tuple[tuple[str, tuple[str, ...]], ...] = ()

    def __post_init__(self):
        for domain, records in self.tables:
            keys = [r["key"] for r in records]
            if len(set(keys)) != len(keys):
                raise ValueError(f"duplicate primary keys in {domain}")

    @property
    def domains(self) -> tuple[str, ...]:
        return tuple(d for d, _ in self.tables)

    def records(self, domain: str) -> tuple[Mapping[str, str], ...]:
        for d, recs in self.tables:
            if d == domain:
                return recs
        raise DatabaseError(f"unknown domain {domain!r}")

    def is_bookable(self, domain: str) -> bool:
        return domain in self.bookable

    def availability_for(self, domain: str) -> tuple[str, ...]:
        return dict(self.availability_slots).get(domain, ())

    def query(self, domain: str, constraints: Mapping[str, str]) -> list[dict]:
        """Records matching every non-absent constraint exactly.

        Matching is case-insensitive; results are ordered by primary key
        ascending so downstream consumers are deterministic.
        """
        wanted = {
            slot: value.lower()
            for slot, value in constraints.items()
            if value and value.lower() != ABSENT
        }
        hits = []
        for record in self.records(domain):
            if all(str(record.get(s, "")).lower() == v for s, v in wanted.items()):
                hits.append(dict(record))
        hits.sort(key=lambda r: r["key"])
        return hits

    def book(self, domain: str, constraints: Mapping[str, str], seed: int = 0) -> BookingResult:
        """Book the first matching record; failures list the violated slots."""
        if not self.is_bookable(domain):
            raise DatabaseError(f"domain {domain!r} is not bookable")
        hits = self.query(domain, constraints)
        if hits:
            return BookingResult(ok=True, reference=booking_reference(seed, hits[0]["key"]))
        mismatched = []
        for slot, value in constraints.items():
            if not value or value.lower() == ABSENT:
                continue
            if not self.query(domain, {slot: value}):
                mismatched.append(slot)
        if not mismatched:  # jointly unsatisfiable constraints
            mismatched = sorted(
                s for s, v in constraints.items() if v and v.lower() != ABSENT
            )
        return BookingResult(ok=False, mismatched=tuple(mismatched))

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            domain: {
                "bookable": domain in self.bookable,
                "availability": list(self.availability_for(domain)),
                "records": [dict(r) for r in records],
            }
            for domain, records in self.tables
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "DomainDB":
        tables = []
        bookable = []
        availability = []
        for domain, spec in data.items():
            tables.append((domain, tuple(dict(r) for r in spec["records"])))
            if spec.get("bookable"):
                bookable.append(domain)
            if spec.get("availability"):
                availability.append((domain, tuple(spec["availability"])))
        return cls(
            tables=tuple(tables),
            bookable=tuple(bookable),
            availability_slots=tuple(availability),
        )

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")

    @classmethod
    def load(cls, path) -> "DomainDB":
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))

    def content_hash(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:16]


def booking_reference(seed: int, record_key: str) -> str:
    """Stable pseudo-random reference code for (seed, record key)."""
    digest = hashlib.sha256(f"{seed}:{record_key}".encode("utf-8")).hexdigest()
    return f"ref{digest[:6]}"


def validate_against_ontology(db: DomainDB, ontology: Ontology):
    for domain, records in db.tables:
        schema = ontology.schema(domain)
        known = set(schema.informable_slots) | set(schema.requestable) | {"key"}
        for record in records:
            unknown = set(record) - known
            if unknown:
                raise ValueError(f"{domain} record {record['key']}: unknown slots {sorted(unknown)}")


def feature_dim(db: DomainDB) -> int:
    """DB feature vector width; a pure function of the DB layout."""
    return sum(
        COUNT_BUCKETS + 1 + len(db.availability_for(domain)) for domain in db.domains
    )


def db_feature_vector(
    db: DomainDB,
    results: Mapping[str, Sequence[Mapping[str, str]]],
    active_domains: Sequence[str],
) -> list[float]:
    """One-hot match-count buckets plus availability and booking bits.

    Bucket index is min(count, 4). Availability bits come from the first
    matching record; inactive domains contribute all-zero blocks.
    """
    active = set(active_domains)
    features: list[float] = []
    for domain in db.domains:
        bucket = [0.0] * COUNT_BUCKETS
        avail = [0.0] * len(db.availability_for(domain))
        booking = 0.0
        if domain in active:
            hits = results.get(domain, ())
            bucket[min(len(hits), COUNT_BUCKETS - 1)] = 1.0
            if hits:
                first = hits[0]
                for i, slot in enumerate(db.availability_for(domain)):
                    if str(first.get(slot, "")).lower() in ("yes", "true", "1"):
                        avail[i] = 1.0
                if db.is_bookable(domain):
                    booking = 1.0
        features.extend(bucket)
        features.extend(avail)
        features.append(booking)
    return features
