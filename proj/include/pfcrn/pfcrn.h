#ifndef PFCRN_H
#define PFCRN_H

/* C interface to the product-form analysis library. Networks are opaque
 * handles; results come back as heap strings (text or JSON) released with
 * pfcrn_string_free. Every call returns a status; on failure the message is
 * available from pfcrn_last_error() on the same thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PFCRN_BUILDING)
#    define PFCRN_API __declspec(dllexport)
#  else
#    define PFCRN_API __declspec(dllimport)
#  endif
#else
#  define PFCRN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pfcrn_network pfcrn_network;

typedef enum pfcrn_status {
  PFCRN_OK = 0,
  PFCRN_ERR_PARSE = 1,     /* network text rejected; diagnostics available */
  PFCRN_ERR_IO = 2,        /* file could not be read or written */
  PFCRN_ERR_INVALID = 3,   /* bad argument or option */
  PFCRN_ERR_BUDGET = 4,    /* symbolic work limit exceeded */
  PFCRN_ERR_INVARIANT = 5, /* internal consistency check failed */
  PFCRN_ERR_INTERNAL = 6   /* anything else, including allocation failure */
} pfcrn_status;

typedef enum pfcrn_command {
  PFCRN_CMD_INFO = 0,
  PFCRN_CMD_COMPONENTS,
  PFCRN_CMD_KERNEL,
  PFCRN_CMD_IDEAL,
  PFCRN_CMD_CLASSIFY,
  PFCRN_CMD_VERIFY,
  PFCRN_CMD_FIT
} pfcrn_command;

typedef enum pfcrn_format { PFCRN_FORMAT_TEXT = 0, PFCRN_FORMAT_JSON = 1 } pfcrn_format;

typedef struct pfcrn_options {
  int64_t levels;            /* highest level examined, at least 2 (default 6) */
  int64_t level;             /* kernel/ideal/components: one level; 0 = use levels */
  const char* rates;         /* "a=1,b=3/2" or NULL */
  const char* witness_rates; /* classify: candidate rates, ';'-separated, or NULL */
  uint64_t seed;             /* random search seed (default 1) */
  pfcrn_format format;
  int timings;               /* nonzero: include wall-clock timings */
} pfcrn_options;

PFCRN_API const char* pfcrn_version(void);
PFCRN_API const char* pfcrn_status_string(pfcrn_status status);
PFCRN_API const char* pfcrn_last_error(void);

PFCRN_API void pfcrn_options_init(pfcrn_options* options);

/* On PFCRN_ERR_PARSE *network is NULL. Diagnostics (errors and warnings, one
 * per line, "origin:line:col: severity: message") are stored in *diagnostics
 * when it is non-NULL; the caller frees them. */
PFCRN_API pfcrn_status pfcrn_network_parse(const char* text, const char* origin,
                                           pfcrn_network** network, char** diagnostics);
PFCRN_API pfcrn_status pfcrn_network_load(const char* path, pfcrn_network** network,
                                          char** diagnostics);
PFCRN_API void pfcrn_network_free(pfcrn_network* network);

PFCRN_API size_t pfcrn_species_count(const pfcrn_network* network);
PFCRN_API size_t pfcrn_reaction_count(const pfcrn_network* network);
/* Canonical one-reaction-per-line form. */
PFCRN_API pfcrn_status pfcrn_network_render(const pfcrn_network* network, char** out);

PFCRN_API pfcrn_status pfcrn_run(const pfcrn_network* network, pfcrn_command command,
                                 const pfcrn_options* options, char** out);

PFCRN_API void pfcrn_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
