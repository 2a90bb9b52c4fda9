"""Printed reference values used by the oracle and acceptance tests."""

import math

R2, R3, R6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)


def _a_closed():
    p1, q1 = 313 / 90 ** 2, -2170 / 90 ** 3
    phi = math.atan(math.sqrt(p1 ** 3 - q1 ** 2) / q1)
    return abs(7 + math.sqrt(313) * math.cos(phi / 3 + 6 * math.pi / 3)) / 45 + math.sqrt(7 / 150) + math.sqrt(91 / 150) / 3


A_CLOSED = _a_closed()
A_DECIMAL = 0.874
B_CLOSED = 2 / 45 * (math.sqrt(119 + 51 / 2 * math.sqrt(19)) + math.sqrt(119 - 51 / 2 * math.sqrt(19))) + 1 / 9 + 17 / 90

# (J, J1, h) -> (ground-state name, [N_mu1, N_S1, N_mu1mu2, N_mu1S1, N_mu1S2], printed decimals)
# values use the closed form wherever one is printed
GS_NEGATIVITIES = {
    (1.0, 0.5, 0.1): ("|0,1/2,1/2>", [0.5, 1.0, (2 + R6) / 3, 0.5, 41 / 18], None),
    (1.0, 0.5, 0.8): ("|1,1/2,1/2>", [R2 / 3, R2 / 3, 2 * (3 * R2 + 2) / 9, 0.0, 2 * (3 * R2 + 2) / 9], None),
    (1.0, 0.5, 2.0): ("|2,1/2,3/2>&|2,3/2,1/2>", [1 / math.sqrt(18), 1 / math.sqrt(18), 1 / 3, 0.0, 1 / 3], None),
    (1.0, 0.5, 5.0): ("|3,3/2,3/2>", [0.0] * 5, None),
    (1.0, 1.0, 0.5): ("|0,1/2,1/2>&|0,3/2,3/2>", [0.5, 1 / 3, 0.5, 1.0, 1.0], None),
    (1.0, 1.0, 1.5): ("|1,1/2,1/2>&|1,1/2,3/2>&|1,3/2,1/2>&|1,3/2,3/2>",
                      [R3 / 8, (1 + R3 + R6) / 40, (5 + R3 + R6 + 3 * R2) / 40, 3 * (1 + 3 * R3) / 40,
                       3 * (1 + 3 * R3) / 40],
                      [0.217, 0.355, 0.336, 0.465, 0.465]),
    (1.0, 1.0, 2.5): ("|2,1/2,3/2>&|2,3/2,1/2>&|2,3/2,3/2>", [math.sqrt(5) / 18, R2 / 9, R2 / 9, 1 / 6, 1 / 6], None),
    (1.0, 1.0, 5.0): ("|3,3/2,3/2>", [0.0] * 5, None),
    (1.0, 2.0, 0.5): ("|0,3/2,3/2>", [0.5, 1.0, (1 + R6) / 3, 1.5, 1.5], None),
    # A: the printed closed form disagrees with its own decimal; the decimal is used
    (1.0, 2.0, 2.5): ("|1,3/2,3/2>", [R2 / 3, A_DECIMAL, (6 * R2 + 6 * math.sqrt(17) + 5 + math.sqrt(34)) / 45,
                                      (4 * R3 + 3) / 10, B_CLOSED], None),
    (1.0, 2.0, 5.0): ("|2,3/2,3/2>", [math.sqrt(5) / 6, R2 / 3, R2 / 3, 0.5, 0.5], None),
    (1.0, 2.0, 7.0): ("|3,3/2,3/2>", [0.0] * 5, None),
}
A1_COLUMNS = ("mu1", "S1", "mu1mu2", "mu1S1", "mu1S2")

MONOGAMY_STATES = ("0,1/2,1/2", "0,3/2,3/2", "1,1/2,1/2", "1,3/2,3/2", "2,mix", "2,3/2,3/2", "3")
# rows: CKW mu1, CKW S1, mu1mu2|S1S2, mu1S1|mu2S2, mu1S2|mu2S1, S1S2|mu1mu2; one (lhs, rhs) per state
MONOGAMY_REF = (
    ((0.250, 0.111), (0.250, 0.077), (0.222, 0.222), (0.222, 0.044), (0.056, 0.009), (0.139, 0.019), (0, 0)),
    ((1.000, 0.123), (1.000, 0.299), (0.222, 0.222), (0.764, 0.124), (0.056, 0.009), (0.222, 0.059), (0, 0)),
    ((2.199, 0.259), (1.320, 0.104), (1.924, 0.444), (0.958, 0.156), (0.111, 0.056), (0.222, 0.085), (0, 0)),
    ((0.250, 0.111), (2.250, 0.507), (0, 0), (0.986, 0.319), (0, 0), (0.250, 0.139), (0, 0)),
    ((5.189, 1.326), (2.250, 0.344), (1.924, 0.444), (1.208, 0.299), (0.111, 0.043), (0.250, 0.139), (0, 0)),
    ((2.199, 0.484), (1.320, 0.222), (1.924, 0.444), (0.958, 0.185), (0.111, 0.030), (0.222, 0.135), (0, 0)),
)

GENUINE = {
    (1.0, 0.5, 0.1): {"theta": 0.884, "nu": 0.801, "omega": 0.841},
    (1.0, 2.0, 0.5): {"theta": 0.939, "nu": 0.843, "omega": 0.882},
}
