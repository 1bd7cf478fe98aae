"""CLI invocations whose output is frozen under tests/golden."""

CASES = {
    "zsigmondy_2_6.txt": ["zsigmondy", "2", "6"],
    "sym_table_4.txt": ["sym-table", "4"],
    "sym_table_4.json": ["sym-table", "4", "--json"],
    "alt_table_5.txt": ["alt-table", "5"],
    "pconst_alt_5_2.json": ["pconst", "alt", "5", "2", "--json"],
    "pconst_sym_10_5.json": ["pconst", "sym", "10", "5", "--json", "--only-constant"],
    "lie_order_2b2_8.json": ["lie", "order", "2B2", "--qsq", "8", "--json"],
    "lie_divides_2a3_3.json": ["lie", "divides", "2A3", "3", "--sign", "minus", "--json"],
    "verify_thm_alt_10_5.json": ["verify", "thm-alt", "n=10", "p=5", "--json"],
    "verify_lemma_plus.json": ["verify", "lemma-plus", "qmax=9", "rankmax=4", "--json"],
}
