import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# every value of the published table, n = 3..10: (P_S, P_E, C_S, C_E)
TABLE = {
    3: (1, 1, 1, 1),
    4: (3, 4, 2, 2),
    5: (8, 12, 4, 4),
    6: (38, 64, 12, 14),
    7: (192, 360, 39, 54),
    8: (1320, 2544, 202, 332),
    9: (10176, 20160, 1219, 2246),
    10: (91296, 181632, 9468, 18264),
}

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
