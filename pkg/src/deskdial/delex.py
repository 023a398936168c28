"""Delexicalization, lexicalization, and surface post-processing."""
from __future__ import annotations

from typing import Mapping, Sequence

from .ontology import REQUEST_VALUE, ABSENT, DialogAct, parse_placeholder, tokenize

# Phrases the downstream language understanding is known to trip over,
# rewritten left-to-right in a single pass.
DEFAULT_SYNONYMS: tuple[tuple[str, str], ...] = (
    ("moderately priced", "moderate"),
    ("center part of town", "centre"),
    ("gbp", "pounds"),
)


def _value_tokens(value: str) -> tuple[str, ...]:
    return tuple(tokenize(value))


def delexicalize(
    tokens: Sequence[str],
    acts: Sequence[DialogAct] = (),
    db_values: Mapping[tuple[str, str], str] | None = None,
    placeholder_table: Mapping[tuple[str, str], str] | None = None,
) -> list[str]:
    """Replace surface slot values with "[domain_slot]" placeholder tokens.

    Candidate values come from the act annotations and any extra
    ``db_values`` record fields. Longer (multi-token) values are replaced
    first so nested value collisions resolve deterministically; matching
    is case-insensitive. Unmatched values pass through unchanged.
    """
    candidates: dict[tuple[str, ...], str] = {}

    def add(domain: str, slot: str, value: str):
        if not value or value in (REQUEST_VALUE, ABSENT):
            return
        vtoks = _value_tokens(value)
        if not vtoks:
            return
        if placeholder_table is not None:
            token = placeholder_table.get((domain, slot))
            if token is None:
                raise KeyError(f"placeholder table does not cover {domain}.{slot}")
        else:
            token = f"[{domain}_{slot}]"
        candidates.setdefault(vtoks, token)

    for act in acts:
        add(act.domain, act.slot, act.value)
    for (domain, slot), value in (db_values or {}).items():
        add(domain, slot, value)

    ordered = sorted(candidates.items(), key=lambda kv: (-len(kv[0]), kv[0]))
    lowered = [t.lower() for t in tokens]
    out: list[str] = []
    i = 0
    while i < len(tokens):
        for vtoks, ph in ordered:
            if tuple(lowered[i : i + len(vtoks)]) == vtoks:
                out.append(ph)
                i += len(vtoks)
                break
        else:
            out.append(tokens[i])
            i += 1
    return out


def lexicalize(
    delex_tokens: Sequence[str],
    constraints: Mapping[tuple[str, str], str] | None,
    db_results: Mapping[str, Sequence[Mapping[str, str]]] | None,
) -> tuple[str, list[str]]:
    """Fill placeholders back in from DB records, then belief constraints.

    Each placeholder is filled from the first record of its domain that
    carries the slot; placeholders for user-constrained slots fall back
    to the constraint (belief argmax) value. Whatever cannot be filled is
    rendered as the literal placeholder token and returned in the second
    element so callers can flag it in the transcript.
    """
    constraints = constraints or {}
    db_results = db_results or {}
    out: list[str] = []
    unfilled: list[str] = []
    for token in delex_tokens:
        parsed = parse_placeholder(token)
        if parsed is None:
            out.append(token)
            continue
        domain, slot = parsed
        value = None
        for record in db_results.get(domain, ()):
            if slot in record:
                value = str(record[slot])
                break
        if value is None:
            value = constraints.get((domain, slot))
        if value is None:
            unfilled.append(token)
            out.append(token)
        else:
            out.append(value)
    return " ".join(out), unfilled


def postprocess_synonyms(
    utterance: str,
    table: Sequence[tuple[str, str]] = DEFAULT_SYNONYMS,
) -> str:
    """Left-to-right single-pass phrase substitution.

    Replacements are emitted and never rescanned, so the output of one
    rule cannot trigger another.
    """
    for phrase, _ in table:
        if not phrase:
            raise ValueError("synonym table entries must be non-empty phrases")
    out: list[str] = []
    i = 0
    while i < len(utterance):
        for phrase, replacement in table:
            if utterance.startswith(phrase, i):
                out.append(replacement)
                i += len(phrase)
                break
        else:
            out.append(utterance[i])
            i += 1
    return "".join(out)
