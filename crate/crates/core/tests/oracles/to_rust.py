"""Converts values.txt (output of gen_oracles.py) into mod.rs."""
lines = open("values.txt").read().splitlines()
sections = {}
cur = None
heads = {"// gamma": "GAMMA", "// ml small": "ML_SMALL", "// ml large": "ML_LARGE", "// erfc": "ERFC_HALF"}
multi = []
for l in lines:
    tag = next((v for k, v in heads.items() if l.startswith(k)), None)
    if tag:
        cur = tag
        sections[cur] = []
        continue
    if l.startswith("//"):
        cur = None
        continue
    if cur and l.strip().startswith("("):
        body = l.strip().split("//")[0].strip().rstrip(",")
        sections[cur].append([float(x) for x in body.strip("()").split(",")])
    elif l.strip() and not l.startswith("//"):
        multi.append(float(l.split(":")[-1]))


def f(x):
    r = repr(x)
    if "e" not in r and "." not in r and "inf" not in r:
        r += ".0"
    return r


types = {"GAMMA": "(f64, f64)", "ML_SMALL": "(f64, f64, f64, f64, f64, f64)",
         "ML_LARGE": "(f64, f64, f64, f64, f64, f64)", "ERFC_HALF": "(f64, f64, f64, f64)"}
docs = {"GAMMA": "(x, Γ(x))",
        "ML_SMALL": "(α, δ, Re z, Im z, Re E, Im E) for |z| ≤ 5",
        "ML_LARGE": "(α, δ, Re z, Im z, Re E, Im E) for |z| ≥ 10 inside the decay sector",
        "ERFC_HALF": "(Re z, Im z, Re, Im) of exp(z²)·erfc(−z) = E_{1/2}(z)"}
out = ["// Reference values generated by gen_oracles.py (mpmath, 50 digits); see to_rust.py.", ""]
for k in ["GAMMA", "ML_SMALL", "ML_LARGE", "ERFC_HALF"]:
    out.append(f"/// {docs[k]}")
    out.append(f"pub const {k}: &[{types[k]}] = &[")
    for v in sections[k]:
        if k in ("ML_SMALL", "ML_LARGE"):
            # mpmath's exp(iπ) leaves a 1e-50 imaginary residue on the negative axis
            if abs(v[3]) < 1e-40 * abs(v[2]):
                v[3] = 0.0
            if abs(v[5]) < 1e-40 * max(abs(v[4]), 1e-300):
                v[5] = 0.0
        out.append("    (" + ", ".join(f(x) for x in v) + "),")
    out.append("];")
    out.append("")
out.append("/// Σ multinomial(k; l) z^l / Γ(b + a·l) for a = [0.3, 0.6], b = 0.9, z = [-0.5, -0.25].")
out.append(f"pub const MULTINOMIAL_2: f64 = {f(multi[0])};")
out.append("/// Same for a = [0.2, 0.45, 0.7], b = 1, z = [-0.4, 0.3, -0.2].")
out.append(f"pub const MULTINOMIAL_3: f64 = {f(multi[1])};")
open("mod.rs", "w").write("\n".join(out) + "\n")
