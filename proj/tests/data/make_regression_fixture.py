# Copyright 2026 The Surrograph Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Regenerates regression_fixture.csv and prints the reference fit used by the
# regression tests (statsmodels binomial GLM, logit link, Wald 95% CI).
#
#   python3 tests/data/make_regression_fixture.py
import numpy as np
import statsmodels.api as sm

rng = np.random.default_rng(20261014)
n = 300
# proportions on a k/deg grid like the real predictor
deg = rng.integers(1, 12, size=n)
same = rng.binomial(deg, rng.uniform(0.1, 0.9, size=n))
x = same / deg
eta = -1.2 + 1.6 * x
y = (rng.uniform(size=n) < 1 / (1 + np.exp(-eta))).astype(int)

path = __file__.rsplit("/", 1)[0] + "/regression_fixture.csv"
with open(path, "w") as f:
    f.write("y,x\n")
    for a, b in zip(y, x):
        f.write(f"{int(a)},{float(b)!r}\n")

# Fit what was written, not the in-memory arrays.
d = np.loadtxt(path, delimiter=",", skiprows=1)
r = sm.GLM(d[:, 0], sm.add_constant(d[:, 1]), family=sm.families.Binomial()).fit(tol=1e-14)
ci = np.exp(r.conf_int(alpha=0.05)[1])
names = ["intercept", "slope", "intercept_se", "slope_se", "odds_ratio", "ci_low", "ci_high", "llf"]
values = [r.params[0], r.params[1], r.bse[0], r.bse[1], np.exp(r.params[1]), ci[0], ci[1], r.llf]
for name, v in zip(names, values):
    print(name, repr(float(v)))
