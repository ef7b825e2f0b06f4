# Checking claims in bulk, then replaying the run from its own report

import json

from unimodshift import verifier as vf

# A sweep generates instances from a seed, checks each one and summarizes.
rep = vf.sweep("Thm5.1", (1, 20), "mixed", trials_per_cell=2, seed=42)
print(rep.claim.value, rep.trials, "instances,", len(rep.failures), "failures")

# The report carries its full generator config, so it can be rebuilt later.
saved = json.dumps(rep.to_dict())
again = vf.replay_sweep(json.loads(saved)["generator_config"])
print("replay identical:", again.same_verdicts(rep), rep.digest[:16])

# Hypotheses are checked before conclusions. Instances outside them count as not-applicable.
rep = vf.sweep("Cor3.7i", (1, 30), "targeted", seed=0)
print(rep.claim.value, "applicable", rep.trials, "not applicable", rep.not_applicable)

# A failing claim comes with a witness that reproduces on its own.
rep = vf.sweep("Cor4.3", (4, 16), "1", 20, seed=3, profiles=["boundary"])
first = rep.failures[0]
print(len(rep.failures), "failures; e.g.", first.instance.poly, json.loads(first.witness)["detail"])
print("recheck:", vf.check("Cor4.3", first.instance).status)
