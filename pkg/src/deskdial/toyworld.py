"""Shipped desk-scale ontology and databases.

Three domains (restaurant, attraction, train), 12 informable slots with
small candidate sets, and five records per domain so brute-force oracles
stay tractable.
"""
from __future__ import annotations

from .database import DomainDB
from .ontology import ABSENT, DomainSchema, Ontology

USER_INTENTS = (
    "greet",
    "inform",
    "request",
    "book",
    "accept_book",
    "correct",
    "thank",
    "bye",
)

AREAS = (ABSENT, "centre", "north", "south", "east")


def toy_ontology() -> Ontology:
    restaurant = DomainSchema(
        name="restaurant",
        informable=(
            ("area", AREAS),
            ("pricerange", (ABSENT, "cheap", "moderate", "expensive")),
            ("food", (ABSENT, "italian", "chinese", "indian", "british")),
            ("name", (ABSENT, "golden curry", "ask", "prezzo", "nandos", "cotto")),
        ),
        requestable=("phone", "address", "postcode", "reference"),
        entity_slot="name",
    )
    attraction = DomainSchema(
        name="attraction",
        informable=(
            ("area", AREAS),
            ("type", (ABSENT, "park", "museum", "college", "cinema")),
            ("pricerange", (ABSENT, "cheap", "moderate", "expensive")),
            (
                "name",
                (
                    ABSENT,
                    "botanic gardens",
                    "byard art",
                    "club salsa",
                    "all saints church",
                    "whale of a time",
                ),
            ),
        ),
        requestable=("entrance", "address", "phone"),
        entity_slot="name",
    )
    train = DomainSchema(
        name="train",
        informable=(
            ("departure", (ABSENT, "cambridge", "london", "ely", "norwich")),
            ("destination", (ABSENT, "cambridge", "london", "ely", "norwich")),
            ("day", (ABSENT, "monday", "friday", "sunday")),
            ("leaveat", (ABSENT, "09:00", "13:30", "18:15", "21:45")),
        ),
        requestable=("price", "duration", "trainid", "arriveby", "reference"),
        entity_slot="trainid",
    )
    return Ontology(
        domains=("restaurant", "attraction", "train"),
        user_intents=USER_INTENTS,
        schemas=(restaurant, attraction, train),
    )


def toy_database() -> DomainDB:
    restaurants = (
        {"key": "r1", "name": "golden curry", "area": "centre", "pricerange": "moderate",
         "food": "indian", "phone": "01223324351", "address": "12 regent street", "postcode": "cb21db"},
        {"key": "r2", "name": "ask", "area": "centre", "pricerange": "cheap",
         "food": "italian", "phone": "01223364917", "address": "59 hills road", "postcode": "cb21nt"},
        {"key": "r3", "name": "prezzo", "area": "north", "pricerange": "moderate",
         "food": "italian", "phone": "01223351707", "address": "22 chesterton road", "postcode": "cb41da"},
        {"key": "r4", "name": "nandos", "area": "south", "pricerange": "cheap",
         "food": "chinese", "phone": "01223327908", "address": "34 mill road", "postcode": "cb12as"},
        {"key": "r5", "name": "cotto", "area": "east", "pricerange": "expensive",
         "food": "british", "phone": "01223302010", "address": "183 east road", "postcode": "cb11bg"},
    )
    attractions = (
        {"key": "a1", "name": "botanic gardens", "area": "centre", "type": "park",
         "pricerange": "moderate", "entrance": "4 pounds", "address": "1 trumpington road", "phone": "01223336265"},
        {"key": "a2", "name": "byard art", "area": "south", "type": "museum",
         "pricerange": "cheap", "entrance": "free", "address": "14 kings parade", "phone": "01223464646"},
        {"key": "a3", "name": "club salsa", "area": "north", "type": "cinema",
         "pricerange": "expensive", "entrance": "5 pounds", "address": "1 station road", "phone": "01223356666"},
        {"key": "a4", "name": "all saints church", "area": "centre", "type": "college",
         "pricerange": "cheap", "entrance": "free", "address": "jesus lane", "phone": "01223452587"},
        {"key": "a5", "name": "whale of a time", "area": "east", "type": "park",
         "pricerange": "cheap", "entrance": "2 pounds", "address": "8 market street", "phone": "01223351234"},
    )
    trains = (
        {"key": "t1", "trainid": "tr8272", "departure": "cambridge", "destination": "ely",
         "day": "friday", "leaveat": "21:45", "arriveby": "22:08", "duration": "23 minutes", "price": "5 pounds"},
        {"key": "t2", "trainid": "tr1234", "departure": "cambridge", "destination": "london",
         "day": "monday", "leaveat": "09:00", "arriveby": "10:01", "duration": "61 minutes", "price": "23 pounds"},
        {"key": "t3", "trainid": "tr5678", "departure": "london", "destination": "cambridge",
         "day": "friday", "leaveat": "13:30", "arriveby": "14:31", "duration": "61 minutes", "price": "23 pounds"},
        {"key": "t4", "trainid": "tr2501", "departure": "norwich", "destination": "cambridge",
         "day": "sunday", "leaveat": "18:15", "arriveby": "19:34", "duration": "79 minutes", "price": "17 pounds"},
        {"key": "t5", "trainid": "tr9966", "departure": "ely", "destination": "norwich",
         "day": "monday", "leaveat": "13:30", "arriveby": "14:25", "duration": "55 minutes", "price": "11 pounds"},
    )
    return DomainDB(
        tables=(
            ("restaurant", restaurants),
            ("attraction", attractions),
            ("train", trains),
        ),
        bookable=("restaurant", "train"),
    )
