/* dqc - debate query complexity toolkit
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the debate library. Every object is an opaque handle created and
 * released here; every call returns a status code, with a thread-local
 * message available from dqc_last_error(). Reports are ordered key/value
 * lists whose structured rendering is byte-stable for fixed seeds.
 */
#ifndef DQC_H
#define DQC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dqc_boolfn dqc_boolfn;
typedef struct dqc_circuit dqc_circuit;
typedef struct dqc_system dqc_system;
typedef struct dqc_machine dqc_machine;
typedef struct dqc_advice dqc_advice;
typedef struct dqc_tree dqc_tree;
typedef struct dqc_rverifier dqc_rverifier;
typedef struct dqc_report dqc_report;

typedef enum dqc_status {
  DQC_OK = 0,
  DQC_ERR_INPUT = 1,         /* wrong shape or argument */
  DQC_ERR_RANGE = 2,         /* index out of range */
  DQC_ERR_NO_WITNESS = 3,    /* function independent of the variable */
  DQC_ERR_PARSE = 4,         /* malformed text or file */
  DQC_ERR_BUDGET = 5,        /* exhaustive check exceeds the budget */
  DQC_ERR_PRECONDITION = 6,  /* operation precondition violated */
  DQC_ERR_CORRUPT_TABLE = 7, /* advice table missing entries */
  DQC_ERR_CONSTRUCTION = 8,  /* randomized construction exhausted retries */
  DQC_ERR_IO = 9,            /* file not readable or writable */
  DQC_ERR_INTERNAL = 10      /* invariant violation */
} dqc_status;

/* Message for the most recent failure on this thread. */
const char* dqc_last_error(void);

/* -- Boolean functions ---------------------------------------------------- */

/* spec is "name:n" (and, or, parity, majority, const0, const1). */
dqc_status dqc_fn_builtin(const char* spec, dqc_boolfn** out);
/* One-line "<n> <hex>" truth-table file. */
dqc_status dqc_fn_load(const char* path, dqc_boolfn** out);
dqc_status dqc_fn_save(const dqc_boolfn* f, const char* path);
int dqc_fn_n(const dqc_boolfn* f);
const char* dqc_fn_label(const dqc_boolfn* f);
/* x is an n-character 0/1 string, x_1 first. */
dqc_status dqc_fn_eval(const dqc_boolfn* f, const char* x, int* out_bit);
dqc_status dqc_fn_depends_on(const dqc_boolfn* f, int i, int* out);
/* Buffers receive NUL-terminated bit strings; cap counts total bytes each. */
dqc_status dqc_fn_witness_pair(const dqc_boolfn* f, int i, char* w, char* w_tilde, size_t cap);
void dqc_fn_free(dqc_boolfn* f);

/* -- Circuits ------------------------------------------------------------- */

dqc_status dqc_circuit_parse(const char* netlist, dqc_circuit** out);
dqc_status dqc_circuit_load(const char* path, dqc_circuit** out);
dqc_status dqc_circuit_save(const dqc_circuit* c, const char* path);
/* Shannon-expansion synthesis from a truth table. */
dqc_status dqc_circuit_synth(const dqc_boolfn* f, dqc_circuit** out);
dqc_status dqc_circuit_parity(int n, dqc_circuit** out);
dqc_status dqc_circuit_majority(int t, dqc_circuit** out);
int dqc_circuit_inputs(const dqc_circuit* c);
int dqc_circuit_size(const dqc_circuit* c);
int dqc_circuit_depth(const dqc_circuit* c);
dqc_status dqc_circuit_normalized_depth(const dqc_circuit* c, int* out);
dqc_status dqc_circuit_eval(const dqc_circuit* c, const char* x, int* out_bit);
dqc_status dqc_circuit_truth_table(const dqc_circuit* c, dqc_boolfn** out);
void dqc_circuit_free(dqc_circuit* c);

/* -- Decision trees ------------------------------------------------------- */

dqc_status dqc_tree_load(const char* path, int space_size, dqc_tree** out);
dqc_status dqc_tree_save(const dqc_tree* t, const char* path);
int dqc_tree_depth(const dqc_tree* t);
dqc_status dqc_tree_to_circuit(const dqc_tree* t, dqc_circuit** out);
void dqc_tree_free(dqc_tree* t);

/* -- Debate systems ------------------------------------------------------- */

/* protocol is "kw" or "crossexam". */
dqc_status dqc_system_build(const char* protocol, const dqc_circuit* c, dqc_system** out);
/* Reconstructs from a descriptor file; also returns the derived function
 * and a report with the chain and source metrics. */
dqc_status dqc_system_load(const char* path, uint64_t budget, dqc_system** out,
                           dqc_boolfn** f_out, dqc_report** report_out);
int dqc_system_n(const dqc_system* s);
int dqc_system_k(const dqc_system* s);
int dqc_system_ell(const dqc_system* s);
const char* dqc_system_provenance(const dqc_system* s);
/* Exact max probes over every answer path (full exploration). */
dqc_status dqc_system_max_probes(const dqc_system* s, uint64_t budget, int* out);
/* Exhaustive Eq.(1)/(2) check; report keys: valid, max_probes_observed,
 * leaf_evals, counterexample_* when invalid. */
dqc_status dqc_system_check_validity(const dqc_system* s, const dqc_boolfn* f, uint64_t budget,
                                     dqc_report** out);
/* Minimax reconstruction agreement; report keys: all_agree, disagreements. */
dqc_status dqc_system_game_value(const dqc_system* s, const dqc_boolfn* f, uint64_t budget,
                                 dqc_report** out);
/* Queried-set sizes; report keys: set_size, x_size, transcript_size. */
dqc_status dqc_system_queried_set(const dqc_system* s, uint64_t budget, dqc_report** out);
dqc_status dqc_system_pad(const dqc_system* s, const int* positions, int count, dqc_system** out);
dqc_status dqc_system_compress(const dqc_system* s, const dqc_boolfn* f, uint64_t budget,
                               dqc_system** out, dqc_report** report_out);
dqc_status dqc_system_compile(const dqc_system* s, const dqc_circuit* cv, uint64_t budget,
                              dqc_system** out, dqc_report** report_out);
/* The verifier flattened into a decision tree over n + 2k positions. */
dqc_status dqc_system_verifier_tree(const dqc_system* s, dqc_tree** out);
void dqc_system_free(dqc_system* s);

/* -- Advice tables -------------------------------------------------------- */

dqc_status dqc_advice_extract(const dqc_system* s, dqc_advice** out);
dqc_status dqc_advice_load(const char* path, dqc_advice** out);
dqc_status dqc_advice_save(const dqc_advice* a, const char* path);
/* Report keys: rows, next_rows, verdict_rows, redacted, payload_bits, ell. */
dqc_status dqc_advice_stats(const dqc_advice* a, dqc_report** out);
/* Exhaustive equality of verdicts and probe sequences with the verifier. */
dqc_status dqc_advice_check(const dqc_system* s, const dqc_advice* a, uint64_t budget,
                            dqc_report** out);
void dqc_advice_free(dqc_advice* a);

/* -- Randomized verifiers ------------------------------------------------- */

dqc_status dqc_rv_load(const char* path, dqc_rverifier** out);
dqc_status dqc_rv_save(const dqc_rverifier* rv, const char* path);
/* Uniform {exact, exact, constant-0} mixture over the system's verifier. */
dqc_status dqc_rv_exact_mix(const dqc_system* s, dqc_rverifier** out);
int dqc_rv_q(const dqc_rverifier* rv);
/* Report keys: max_error, pairs. */
dqc_status dqc_rv_error(const dqc_rverifier* rv, const dqc_system* s, const dqc_boolfn* f,
                        uint64_t budget, dqc_report** out);
void dqc_rv_free(dqc_rverifier* rv);

/* -- Theorem pipelines ---------------------------------------------------- */

/* Yao hard distribution plus the pairing bound for one tree. Report keys:
 * atoms, measured_error, certified_lower_bound, forced_pairs,
 * distinct_x_probed. */
dqc_status dqc_yao_run(const dqc_system* s, const dqc_boolfn* f, const dqc_tree* t,
                       dqc_report** out);
/* Newman derandomization; the compiled system and verifier circuit are
 * returned when the out-pointers are non-NULL. */
dqc_status dqc_newman_run(const dqc_rverifier* rv, const dqc_system* s, const dqc_boolfn* f,
                          uint64_t seed, uint64_t budget, dqc_report** out,
                          dqc_system** system_out, dqc_circuit** cv_out);

/* -- Toy machines --------------------------------------------------------- */

/* spec is "builtin:<name>:<param>" (counter, identity, parityacc,
 * parityaccwrap) or a .tm file path; horizon_t < 0 keeps the file's T. */
dqc_status dqc_machine_open(const char* spec, int horizon_t, dqc_machine** out);
dqc_status dqc_machine_save(const dqc_machine* m, const char* path);
dqc_status dqc_machine_run(const dqc_machine* m, const char* x, char* final_config, size_t cap,
                           int* accept_bit);
dqc_status dqc_machine_truth_table(const dqc_machine* m, dqc_boolfn** out);
/* Bisection debate for the machine. */
dqc_status dqc_machine_bisection(const dqc_machine* m, uint64_t budget, dqc_system** out);
/* Full Lemma 4.3 pipeline; report keys: m, b, uncompiled_max_probes,
 * compiled_probe_bound, pairs_checked. */
dqc_status dqc_pspace_pipeline(const dqc_machine* m, uint64_t budget, dqc_report** out,
                               dqc_system** system_out, dqc_circuit** cv_out);
void dqc_machine_free(dqc_machine* m);

/* -- Reports -------------------------------------------------------------- */

int dqc_report_count(const dqc_report* r);
const char* dqc_report_key(const dqc_report* r, int i);
const char* dqc_report_value(const dqc_report* r, int i);
/* NULL when the key is absent. */
const char* dqc_report_get(const dqc_report* r, const char* key);
void dqc_report_free(dqc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* DQC_H */
