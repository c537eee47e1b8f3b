"""
Every semantics on a handful of frameworks
==========================================

Enumerate all nine families for the shipped example frameworks and a
random one. Families are printed in canonical order (size, then indices).
"""

from importlib import resources

from afmatrix import SemanticsId, build_matrix, enumerate_all, load
from afmatrix.validation import GeneratorConfig, random_af


def show(title, af):
    print(f"== {title}  ({af.n} arguments, {len(af.attacks)} attacks)")
    families = enumerate_all(build_matrix(af))
    for sem in SemanticsId:
        fam = [af.labels(e.indices) for e in families[sem]]
        text = " ".join("{" + ",".join(x) + "}" for x in fam) or "(none)"
        print(f"  {sem.value:>3}: {text}")


data = resources.files("afmatrix") / "data"
for name in ("ex6", "ex7", "ex8", "ex17"):
    show(name, load(str(data / f"{name}.tgf")))

# a random framework with self-attacks allowed
show("random n=6 p=0.3", random_af(GeneratorConfig(6, 0.3, allow_self_attacks=True, seed=11)))
