#!/usr/bin/env python3
"""Label-preserving vs label-agnostic augmentations, measured.

Applies every augmentation kind at a fixed intensity to the same corpus and
counts label flips against the brute-force oracle.  The six guaranteed
transformations never flip; the four graph-style baselines flip often -
which is exactly why they make poor positive pairs for contrastive
training on satisfiability.
"""

from cnfaug import (
    GenFamily,
    GenSpec,
    LaaKind,
    LpaKind,
    AugmentationSpec,
    apply_chain,
    gen_corpus,
    solve_brute,
)

corpus = gen_corpus(GenSpec(GenFamily.SR, 10), 100, seed=20240811)
print(f"corpus: {len(corpus)} paired SR(10) instances\n")

print(f"{'kind':6s} {'flips':>6s} {'flip rate':>10s}")
for kind in list(LpaKind) + list(LaaKind):
    flips = 0
    for idx, inst in enumerate(corpus):
        spec = AugmentationSpec(kind, rate=0.3, seed=idx)
        out = apply_chain(inst.formula, (spec,))
        if solve_brute(out) is not inst.label:
            flips += 1
    marker = "guaranteed" if isinstance(kind, LpaKind) else "baseline"
    print(f"{kind.value:6s} {flips:6d} {flips / len(corpus):10.1%}   {marker}")

print()
print("chained application stays safe as long as every step is guaranteed:")
from cnfaug import parse_chain

chain = parse_chain("AU:0.2:3,CR:0.3:9,SC,VE:0.1:5")
flips = sum(
    1
    for inst in corpus
    if solve_brute(apply_chain(inst.formula, chain)) is not inst.label
)
print(f"  AU -> CR -> SC -> VE on {len(corpus)} instances: {flips} flips")
