#!/usr/bin/env python3
"""Generates the synthetic corpus under crates/core/fixtures/synthetic.

Eight documents, roughly 200 centering units in total. The documents are
random but well-formed: every structural invariant the validator checks
holds, pronouns only pick up entities already mentioned in the document,
and agreement morphology is consistent with the referent. Seeded, so
reruns reproduce the shipped files byte for byte.
"""

import json
import os
import random

OUT = os.path.join(
    os.path.dirname(__file__), "..", "crates", "core", "fixtures", "synthetic"
)

rng = random.Random(20240614)

FIRST_NAMES = [
    "anna", "bruno", "carla", "dario", "elena", "fabio", "gina", "hugo",
]
THINGS = ["lettera", "giardino", "libro", "tavolo", "chiave", "porta"]


def make_entities(doc_index):
    entities = []
    people = rng.sample(FIRST_NAMES, rng.randint(4, 6))
    for name in people:
        entities.append({
            "id": name,
            "animate": True,
            "gender": rng.choice(["masc", "fem"]),
            "number": "sg",
            "person": 3,
            "is_set": False,
            "members": [],
            "deictic": False,
        })
    for thing in rng.sample(THINGS, 2):
        entities.append({
            "id": thing,
            "animate": False,
            "gender": rng.choice(["masc", "fem"]),
            "number": rng.choice(["sg", "pl"]),
            "person": 3,
            "is_set": False,
            "members": [],
            "deictic": False,
        })
    entities.append({
        "id": "io",
        "animate": True,
        "gender": "unspec",
        "number": "sg",
        "person": 1,
        "is_set": False,
        "members": [],
        "deictic": True,
    })
    if doc_index % 2 == 0:
        pair = rng.sample(people, 2)
        entities.append({
            "id": f"gruppo_{pair[0]}_{pair[1]}",
            "animate": True,
            "gender": "unspec",
            "number": "pl",
            "person": 3,
            "is_set": True,
            "members": pair,
            "deictic": False,
        })
    return entities


def mention(mid, entity, form, role, pos, clitic=None, poss=None, constrained=False):
    return {
        "id": mid,
        "entity": entity,
        "form": form,
        "role": role,
        "surface_pos": pos,
        "empathy": False,
        "qis_or_arb": False,
        "clitic_position": clitic,
        "possessor": poss,
        "constrained": constrained,
    }


def generate_document(doc_index):
    entities = make_entities(doc_index)
    by_id = {e["id"]: e for e in entities}
    animates = [e["id"] for e in entities if e["animate"] and not e["deictic"]]
    inanimates = [e["id"] for e in entities if not e["animate"]]

    introduced = []
    mention_seq = [0]

    def next_mid():
        mention_seq[0] += 1
        return f"d{doc_index}_m{mention_seq[0]}"

    def pick_subject_entity():
        # Pronouns need an antecedent; names and full NPs may introduce.
        if introduced and rng.random() < 0.6:
            return rng.choice(introduced), rng.choice(["null", "strong"])
        return rng.choice(animates), rng.choice(["name", "np"])

    def build_clause(cid, kind, order, attach, tensed):
        subject, form = pick_subject_entity()
        if form in ("null", "strong") and by_id[subject]["is_set"] and rng.random() < 0.5:
            subject = rng.choice(by_id[subject]["members"])
        mentions = [mention(next_mid(), subject, form, "subject", 0)]
        pos = 1
        for _ in range(rng.randint(0, 2)):
            role = rng.choice(["object", "object2", "oblique"])
            if rng.random() < 0.4 and introduced:
                target = rng.choice(introduced)
                if target != subject and by_id[target]["animate"]:
                    mentions.append(mention(
                        next_mid(), target, "clitic", role, pos,
                        clitic=rng.choice(["climbed", "in_situ"]),
                    ))
                    pos += 1
                    continue
            target = rng.choice(animates + inanimates)
            poss = None
            if target in inanimates and introduced and rng.random() < 0.3:
                candidate = rng.choice(introduced)
                if by_id[candidate]["animate"]:
                    poss = candidate
            mentions.append(mention(next_mid(), target, rng.choice(["np", "name"]), role, pos, poss=poss))
            pos += 1
        if tensed and form == "null":
            agr_g = by_id[subject]["gender"]
            agr_n = by_id[subject]["number"]
        else:
            agr_g, agr_n = "unspec", "unspec"
        if not tensed:
            agr_g, agr_n = "unspec", "unspec"
        for m in mentions:
            introduced.append(m["entity"]) if m["entity"] not in introduced else None
            if m["possessor"] and m["possessor"] not in introduced:
                introduced.append(m["possessor"])
        return {
            "id": cid,
            "kind": kind,
            "attach_to": attach,
            "order": order,
            "other_construction": False,
            "verbal_complex": {"tensed": tensed, "agr_gender": agr_g, "agr_number": agr_n},
            "mentions": mentions,
        }

    sentences = []
    unit_estimate = 0
    sentence_index = 0
    target_units = 25
    while unit_estimate < target_units:
        sentence_index += 1
        sid = f"d{doc_index}_s{sentence_index}"
        clauses = []
        main_id = f"{sid}_c1"
        clauses.append(build_clause(main_id, "main", 0, None, True))
        unit_estimate += 1
        extra = rng.random()
        if extra < 0.25:
            clauses.append(build_clause(f"{sid}_c2", "conjunct", 1, None, True))
            unit_estimate += 1
        elif extra < 0.45:
            clauses.append(build_clause(f"{sid}_c2", "tensed_adjunct", 1, main_id, True))
            unit_estimate += 1
        elif extra < 0.60:
            clauses.append(build_clause(f"{sid}_c2", "tenseless_adjunct", 1, main_id, False))
        elif extra < 0.75:
            clauses.append(build_clause(f"{sid}_c2", "complement", 1, main_id, True))
        elif extra < 0.85:
            clauses.append(build_clause(f"{sid}_c2", "relative", 1, main_id, True))
        sentences.append({"id": sid, "clauses": clauses})

    return {
        "doc_id": f"synthetic_{doc_index}",
        "entities": entities,
        "sentences": sentences,
    }


os.makedirs(OUT, exist_ok=True)
total = 0
for i in range(8):
    doc = generate_document(i)
    path = os.path.join(OUT, f"synthetic_{i}.json")
    with open(path, "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")
    units = sum(
        1
        for s in doc["sentences"]
        for c in s["clauses"]
        if c["kind"] in ("main", "conjunct", "tensed_adjunct")
    )
    total += units
    print(f"wrote {path} ({units} head units)")
print(f"total head units: {total}")
