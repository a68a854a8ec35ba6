# app/validators: sampled verification suites (axioms, lemmas, witnesses)
