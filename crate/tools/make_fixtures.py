#!/usr/bin/env python3
"""Regenerates the hand-designed example fixtures under crates/core/fixtures.

Each fixture encodes a small discourse exercising one corner of the
analysis: pro-drop chains, clitic climbing, possessive ranking, set
reference, preposed adjuncts. The expected outputs live in the test
suites; this script only rebuilds the inputs deterministically.
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "fixtures")


def E(id, gender="unspec", number="sg", animate=True, person=3, members=None, deictic=False):
    return {
        "id": id,
        "animate": animate,
        "gender": gender,
        "number": number,
        "person": person,
        "is_set": bool(members),
        "members": members or [],
        "deictic": deictic,
    }


def M(id, entity, form, role, pos, empathy=False, qis=False, clitic=None, poss=None, constrained=False):
    return {
        "id": id,
        "entity": entity,
        "form": form,
        "role": role,
        "surface_pos": pos,
        "empathy": empathy,
        "qis_or_arb": qis,
        "clitic_position": clitic,
        "possessor": poss,
        "constrained": constrained,
    }


def C(id, kind, order, mentions, attach=None, other=False, tensed=True, agr_g="unspec", agr_n="unspec"):
    return {
        "id": id,
        "kind": kind,
        "attach_to": attach,
        "order": order,
        "other_construction": other,
        "verbal_complex": {"tensed": tensed, "agr_gender": agr_g, "agr_number": agr_n},
        "mentions": mentions,
    }


def S(id, clauses):
    return {"id": id, "clauses": clauses}


def D(doc_id, entities, sentences):
    return {"doc_id": doc_id, "entities": entities, "sentences": sentences}


def write(name, doc):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")
    print(f"wrote {path}")


MARIA_GIOVANNI = [E("maria", gender="fem"), E("giovanni", gender="masc")]


def ex5_base(third_sentence):
    return D(
        "ex5",
        MARIA_GIOVANNI,
        [
            S("s1", [C("c1", "main", 0, [M("m1", "maria", "name", "subject", 0)])]),
            S("s2", [C("c2", "main", 0, [
                M("m2", "maria", "null", "subject", 0),
                M("m3", "giovanni", "name", "object2", 1),
            ], agr_g="fem", agr_n="sg")]),
            third_sentence,
        ],
    )


# Overt strong-pronoun subject picks up the lower-ranked center: a shift.
write("ex5.json", ex5_base(S("s3", [
    C("c3", "main", 0, [M("m4", "giovanni", "strong", "subject", 0)]),
    C("c4", "tensed_adjunct", 1, [M("m5", "giovanni", "null", "subject", 0)], attach="c3"),
])))

# Unmarked null subject keeps the previous center.
write("ex5_i.json", ex5_base(S("s3", [
    C("c3", "main", 0, [M("m4", "maria", "null", "subject", 0)]),
    C("c4", "tensed_adjunct", 1, [
        M("m5", "maria", "null", "subject", 0),
        M("m6", "giovanni", "clitic", "object", 1, clitic="climbed"),
    ], attach="c3"),
])))

# Masculine participle agreement forces the non-default referent.
write("ex5_iv.json", ex5_base(S("s3", [
    C("c3", "main", 0, [M("m4", "giovanni", "null", "subject", 0)], agr_g="masc", agr_n="sg"),
    C("c4", "tensed_adjunct", 1, [M("m5", "giovanni", "null", "subject", 0)], attach="c3",
      agr_g="masc", agr_n="sg"),
])))

# Strong subject realizing a low prior center while the clitic keeps the
# higher one: rough shift.
write("ex7.json", D(
    "ex7",
    [E("giorgio", gender="masc"), E("maria", gender="fem"), E("giovanni", gender="masc")],
    [
        S("s1", [C("c1", "main", 0, [
            M("m1", "giorgio", "name", "subject", 0),
            M("m2", "maria", "np", "other", 1),
        ])]),
        S("s2", [C("c2", "main", 0, [
            M("m3", "giorgio", "null", "subject", 0),
            M("m4", "maria", "clitic", "object", 1, clitic="climbed"),
            M("m5", "giovanni", "name", "object2", 2),
        ])]),
        S("s3", [C("c3", "main", 0, [
            M("m6", "maria", "strong", "subject", 0),
            M("m7", "giovanni", "clitic", "object", 1, clitic="climbed"),
        ])]),
    ],
))


def ex8_base(doc_id, third_clause):
    return D(
        doc_id,
        [E("io", person=1, deictic=True), E("maria", gender="fem"), E("giorgio", gender="masc")],
        [
            S("s1", [C("c1", "main", 0, [
                M("m1", "io", "null", "subject", 0),
                M("m2", "maria", "np", "oblique", 1),
            ])]),
            S("s2", [C("c2", "main", 0, [
                M("m3", "maria", "null", "subject", 0),
                M("m4", "giorgio", "np", "oblique", 1),
            ], agr_g="fem", agr_n="sg")]),
            S("s3", [third_clause]),
        ],
    )


# In-situ dative clitic arrives late; the default interpretation stands.
write("ex8_i.json", ex8_base("ex8_i", C("c3", "main", 0, [
    M("m5", "maria", "null", "subject", 0),
    M("m6", "giorgio", "clitic", "object2", 1, clitic="in_situ"),
])))

# Same shape, opposite referents: the late clitic forces a revision.
write("ex8_ii.json", ex8_base("ex8_ii", C("c3", "main", 0, [
    M("m5", "giorgio", "null", "subject", 0),
    M("m6", "maria", "clitic", "object2", 1, clitic="in_situ"),
])))

# Climbed clitic rules the default out inside the verbal complex: no
# garden path.
write("ex8_iii.json", ex8_base("ex8_iii", C("c3", "main", 0, [
    M("m5", "giorgio", "null", "subject", 0),
    M("m6", "maria", "clitic", "object2", 1, clitic="climbed"),
])))

# Retain/continue alternation across adjuncts, held together by
# possessor ranking; the merged gerundive contributes the clitic.
write("ex9.json", D(
    "ex9",
    [
        E("io", person=1, deictic=True),
        E("irais", gender="fem"),
        E("marito", gender="masc"),
        E("pensiero", gender="masc", animate=False),
        E("doveri", gender="masc", number="pl", animate=False),
    ],
    [
        S("s1", [C("c0", "main", 0, [M("m0", "irais", "name", "subject", 0)])]),
        S("s2", [
            C("c1", "main", 0, [
                M("m1", "io", "null", "subject", 0),
                M("m2", "pensiero", "np", "object", 1, poss="irais"),
                M("m3", "doveri", "np", "oblique", 2, poss="irais"),
            ]),
            C("c2", "tenseless_adjunct", 1, [
                M("m4", "irais", "clitic", "object2", 0, clitic="in_situ"),
            ], attach="c1", tensed=False),
            C("c3", "tensed_adjunct", 2, [
                M("m5", "marito", "np", "subject", 0, poss="irais"),
            ], attach="c2"),
        ]),
        S("s3", [
            C("c4", "main", 0, [M("m6", "irais", "strong", "subject", 0)]),
            C("c5", "tensed_adjunct", 1, [
                # Contrastive subject: the overt form is forced, so the
                # pronoun is not free for center establishment.
                M("m7", "marito", "strong", "subject", 0, constrained=True),
                M("m8", "irais", "clitic", "object2", 1, clitic="in_situ"),
            ], attach="c4"),
            C("c6", "tensed_adjunct", 2, [
                M("m9", "irais", "null", "subject", 0),
            ], attach="c5", agr_g="fem", agr_n="sg"),
        ]),
    ],
))

# Coordination-bound second conjunct: its subject is not free in form.
write("ex10.json", D(
    "ex10",
    [E("tizio", gender="masc")],
    [S("s1", [
        C("c1", "main", 0, [M("m1", "tizio", "strong", "subject", 0)]),
        C("c2", "conjunct", 1, [M("m2", "tizio", "null", "subject", 0, constrained=True)]),
    ])],
))

# Set reference and arbitrary quantified subjects: centers re-established
# from the global focus rather than carried over.
write("ex12.json", D(
    "ex12",
    [
        E("pastore", gender="masc"),
        E("moglie", gender="fem"),
        E("coppia", number="pl", members=["pastore", "moglie"]),
        E("cose", gender="fem", number="pl", animate=False),
        E("tutti", gender="masc", number="pl"),
    ],
    [
        S("s1", [C("c1", "main", 0, [M("m1", "coppia", "np", "subject", 0)], agr_n="pl")]),
        S("s2", [C("c2", "main", 0, [
            M("m2", "pastore", "strong", "subject", 0),
            M("m3", "cose", "np", "object", 1),
        ])]),
        S("s3", [C("c3", "main", 0, [M("m4", "tutti", "np", "subject", 0, qis=True)], agr_n="pl")]),
        S("s4", [C("c4", "main", 0, [M("m5", "coppia", "null", "subject", 0)], agr_n="pl")]),
    ],
))

# Possessor ranking: animate possessed follows, inanimate precedes.
write("ex13.json", D(
    "ex13",
    [
        E("io", person=1, deictic=True),
        E("mary", gender="fem"),
        E("marito", gender="masc"),
        E("macchina", gender="fem", animate=False),
    ],
    [
        S("s1", [C("c1", "main", 0, [
            M("m1", "io", "null", "subject", 0),
            M("m2", "mary", "np", "object", 1),
        ])]),
        S("s2", [C("c2", "main", 0, [M("m3", "mary", "strong", "subject", 0)])]),
        S("s3", [C("c3", "main", 0, [M("m4", "marito", "np", "subject", 0, poss="mary")],
                   agr_g="masc", agr_n="sg")]),
        S("s4", [C("c4", "main", 0, [M("m5", "macchina", "np", "subject", 0, poss="mary")],
                   agr_g="fem", agr_n="sg")]),
    ],
))

# Preposed tensed adjunct interrupts the chain; the matrix subject
# re-establishes its referent from the focus.
write("ex14.json", D(
    "ex14",
    [
        E("vicina", gender="fem"),
        E("pigroni", gender="masc", number="pl"),
        E("calessino", gender="masc", animate=False),
    ],
    [
        S("s1", [C("c1", "main", 0, [M("m1", "vicina", "name", "subject", 0)])]),
        S("s2", [
            C("c2", "tensed_adjunct", 0, [M("m2", "pigroni", "np", "subject", 0)],
              attach="c3", agr_n="pl"),
            C("c3", "main", 1, [
                M("m3", "vicina", "strong", "subject", 0),
                M("m4", "calessino", "np", "oblique", 1, poss="vicina"),
            ]),
        ]),
    ],
))

# Member of a focused set picked out by a strong pronoun.
write("ex16.json", D(
    "ex16",
    [
        E("pastore", gender="masc"),
        E("moglie", gender="fem"),
        E("coppia", number="pl", members=["pastore", "moglie"]),
        E("parrocchia", gender="fem", animate=False),
    ],
    [
        S("s1", [C("c1", "main", 0, [M("m1", "coppia", "np", "subject", 0)], agr_n="pl")]),
        S("s2", [C("c2", "main", 0, [M("m2", "coppia", "null", "subject", 0)], agr_n="pl")]),
        S("s3", [C("c3", "main", 0, [
            M("m3", "pastore", "strong", "subject", 0),
            M("m4", "parrocchia", "np", "oblique", 1, poss="pastore"),
        ])]),
    ],
))

# Retain realized with a strong pronoun where the climbed clitic already
# excluded the previous center: the overt form is informative.
write("ex19.json", D(
    "ex19",
    [
        E("ospite", gender="fem"),
        E("marito", gender="masc"),
        E("noi", person=1, number="pl", deictic=True),
    ],
    [
        S("s1", [C("c1", "main", 0, [M("m1", "ospite", "name", "subject", 0)])]),
        S("s2", [C("c2", "main", 0, [
            M("m2", "ospite", "null", "subject", 0),
            M("m3", "marito", "clitic", "object", 1, clitic="in_situ"),
            M("m4", "noi", "strong", "oblique", 2),
        ], agr_g="fem", agr_n="sg")]),
        S("s3", [C("c3", "main", 0, [
            M("m5", "marito", "strong", "subject", 0),
            M("m6", "ospite", "clitic", "object2", 1, clitic="climbed"),
        ])]),
    ],
))

# Smallest well-formed two-unit document, used by CLI smoke tests.
write("minimal.json", D(
    "minimal",
    [E("anna", gender="fem")],
    [
        S("s1", [C("c1", "main", 0, [M("m1", "anna", "name", "subject", 0)])]),
        S("s2", [C("c2", "main", 0, [M("m2", "anna", "null", "subject", 0)],
                   agr_g="fem", agr_n="sg")]),
    ],
))

# ---------------------------------------------------------------------------
# Labeled distribution fixture: 113 pronoun observations across eight texts,
# by form and transition, with every CONTINUE tagged by its preceding
# transition. Counts are the frozen reference for the distribution and
# chi-square goldens.

# text -> (null row, strong row); columns: continue, retain, shift,
# cent-est, other.
PER_TEXT = {
    "diary":  ([20, 4, 5, 6, 1], [7, 3, 3, 9, 1]),
    "novel":  ([7, 0, 0, 2, 0], [0, 0, 1, 1, 0]),
    "letter": ([4, 0, 0, 0, 0], [1, 0, 1, 0, 0]),
    "bboard": ([6, 0, 0, 1, 0], [0, 0, 0, 0, 0]),
    "story":  ([11, 0, 0, 2, 0], [1, 0, 0, 0, 0]),
    "news1":  ([4, 0, 1, 0, 1], [1, 0, 0, 0, 0]),
    "news2":  ([0, 0, 0, 0, 0], [2, 1, 0, 0, 0]),
    "news3":  ([4, 0, 0, 1, 0], [1, 0, 0, 0, 0]),
}

# How many of each text's CONTINUEs follow a RETAIN (the rest follow a
# CONTINUE or a shift).
RET_CONT = {
    "null": {"diary": 5},
    "strong": {"diary": 5, "news2": 1},
}

COLUMNS = ["CONTINUE", "RETAIN", "SHIFT", "CENT_EST", "OTHER"]

records = []
for text, (null_row, strong_row) in PER_TEXT.items():
    for form, row in (("null", null_row), ("strong", strong_row)):
        for column, count in zip(COLUMNS, row):
            for i in range(count):
                bigram = None
                if column == "CONTINUE":
                    ret = RET_CONT[form].get(text, 0)
                    bigram = "RET_CONT" if i < ret else "CONT_CONT"
                records.append({
                    "text": text,
                    "form": form,
                    "transition": column,
                    "bigram": bigram,
                })

assert len(records) == 113, len(records)
path = os.path.join(OUT, "labels.json")
with open(path, "w") as f:
    json.dump(records, f, indent=2)
    f.write("\n")
print(f"wrote {path} ({len(records)} records)")
