/* Copyright 2026 The latentmix Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the latentmix trainer.
 *
 * Every function returns an lmx_status. On failure the calling thread's
 * lmx_last_error() holds a message; it stays valid until the next failing
 * call on that thread. Handles are opaque and owned by the caller, who
 * releases them with the matching _free function (NULL is accepted).
 * Strings passed in must be NUL-terminated UTF-8.
 */

#ifndef LATENTMIX_C_API_H_
#define LATENTMIX_C_API_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LMX_API __declspec(dllexport)
#else
#define LMX_API __attribute__((visibility("default")))
#endif

typedef enum lmx_status {
  LMX_OK = 0,
  LMX_ERR_INVALID_ARGUMENT = 1, /* NULL handle or out-pointer, bad range */
  LMX_ERR_CONFIG = 2,           /* unknown key, unparsable or invalid value */
  LMX_ERR_IO = 3,               /* file missing or unwritable */
  LMX_ERR_CHECKPOINT = 4,       /* corrupt, incompatible or mismatched checkpoint */
  LMX_ERR_SHAPE = 5,
  LMX_ERR_NUMERIC = 6,          /* non-finite loss or gradient */
  LMX_ERR_BUFFER_TOO_SMALL = 7, /* see the `needed` out-parameter */
  LMX_ERR_INTERNAL = 8
} lmx_status;

typedef struct lmx_config lmx_config;
typedef struct lmx_model lmx_model;

LMX_API const char* lmx_version(void);
LMX_API const char* lmx_status_name(lmx_status status);
LMX_API const char* lmx_last_error(void);

/* ---- configuration ---------------------------------------------------- */

/* Creates a configuration holding the defaults. */
LMX_API lmx_status lmx_config_new(lmx_config** out);
LMX_API void lmx_config_free(lmx_config* config);
/* Applies a key = value file on top of the current values. */
LMX_API lmx_status lmx_config_load(lmx_config* config, const char* path);
LMX_API lmx_status lmx_config_set(lmx_config* config, const char* key, const char* value);
/* Copies the value of `key` into buf (capacity cap, NUL included). `needed`
 * (optional) receives the required capacity. */
LMX_API lmx_status lmx_config_get(const lmx_config* config, const char* key, char* buf,
                                  size_t cap, size_t* needed);
/* Full key=value text, one entry per line. Same buffer contract as get. */
LMX_API lmx_status lmx_config_serialize(const lmx_config* config, char* buf, size_t cap,
                                        size_t* needed);
LMX_API lmx_status lmx_config_validate(const lmx_config* config);

/* ---- training ---------------------------------------------------------- */

typedef struct lmx_eval_stats {
  int32_t episodes;
  double mean;
  double median;
  double p25;
  double p75;
} lmx_eval_stats;

typedef struct lmx_train_summary {
  int64_t timesteps;
  int64_t episodes;
  int64_t gradient_steps;
  lmx_eval_stats final_eval;
} lmx_train_summary;

/* Called after every gradient step; return nonzero to keep going. A zero
 * return stops training with LMX_ERR_INTERNAL ("cancelled"). */
typedef int (*lmx_progress_fn)(void* user, int64_t step, double td_loss, double total_loss);

/* Trains to completion and writes config.txt, manifest.txt, metrics.csv and
 * checkpoints/final.lmx under the config's out_dir. `progress` may be NULL. */
LMX_API lmx_status lmx_train(const lmx_config* config, lmx_progress_fn progress, void* user,
                             lmx_train_summary* out);

/* ---- trained models ---------------------------------------------------- */

/* Builds the networks described by `config` and restores a checkpoint. */
LMX_API lmx_status lmx_model_load(const lmx_config* config, const char* checkpoint_path,
                                  lmx_model** out);
LMX_API void lmx_model_free(lmx_model* model);

/* Greedy returns over `episodes` evaluation seeds derived from `seed`. */
LMX_API lmx_status lmx_model_evaluate(lmx_model* model, int32_t episodes, uint64_t seed,
                                      lmx_eval_stats* out);

/* Plays `episodes` greedy episodes and writes one CSV row per state with
 * the latent state (n_agents * latent_dim columns). When state_csv is not
 * NULL the environment's true state is written there row for row. Only
 * models trained with algorithm=side have latents. */
LMX_API lmx_status lmx_model_dump_latents(lmx_model* model, int32_t episodes, uint64_t seed,
                                          const char* latent_csv, const char* state_csv,
                                          int32_t* latent_columns);

/* ---- scripted comparisons ----------------------------------------------- */

typedef struct lmx_bench_options {
  const char* suite;       /* "two_step" or "hidden_state" */
  int32_t seeds;           /* default 5 when 0 */
  uint64_t first_seed;     /* default 1 when 0 */
  int64_t timesteps;       /* 0 keeps the suite budget */
  const char* out_dir;     /* default "runs/bench" when NULL */
  int32_t reuse;           /* reuse completed runs with identical configs */
  /* Optional progress lines, one per started or finished run. */
  void (*log)(void* user, const char* line);
  void* log_user;
} lmx_bench_options;

/* Runs a comparison suite; hyperparameters come from `config`. `passed`
 * receives 1 when every hard comparison passed. The summary table is
 * written to <out_dir>/<suite>_summary.txt. */
LMX_API lmx_status lmx_bench(const lmx_config* config, const lmx_bench_options* options,
                             int32_t* passed);

#ifdef __cplusplus
}
#endif

#endif /* LATENTMIX_C_API_H_ */
