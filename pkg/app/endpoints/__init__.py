from app.endpoints import alpha_table, check_axioms, compactness, converge, riesz, roundtrip

COMMANDS = (check_axioms, alpha_table, roundtrip, converge, riesz, compactness)
