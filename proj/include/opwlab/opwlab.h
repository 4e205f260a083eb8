/* C interface to the opwlab library. All handles are opaque; every call that
 * can fail returns an opw_status and leaves a message for opw_last_error(). */
#ifndef OPWLAB_H
#define OPWLAB_H

#include <stddef.h>

#if defined(OPWLAB_BUILDING)
#define OPW_API __attribute__((visibility("default")))
#else
#define OPW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum opw_status {
  OPW_OK = 0,
  OPW_ERR_INVALID_ARGUMENT = 1,
  OPW_ERR_PARSE = 2,
  OPW_ERR_SCOPE = 3,
  OPW_ERR_NOT_OUTERPLANAR = 4,
  OPW_ERR_PRECONDITION = 5,
  OPW_ERR_INTERNAL = 6
} opw_status;

typedef enum opw_format {
  OPW_FORMAT_AUTO = 0,
  OPW_FORMAT_EDGES = 1,
  OPW_FORMAT_GRAPH6 = 2,
  OPW_FORMAT_MOP = 3
} opw_format;

typedef enum opw_engine { OPW_ENGINE_VS = 0, OPW_ENGINE_BAGS = 1, OPW_ENGINE_BOTH = 2 } opw_engine;

typedef struct opw_graph opw_graph;
typedef struct opw_report opw_report;

OPW_API const char* opw_version(void);
OPW_API const char* opw_status_name(opw_status status);
/* Message of the most recent failure on this thread; "" if none. */
OPW_API const char* opw_last_error(void);

/* ---- graphs ---- */
OPW_API opw_status opw_graph_parse(const char* text, size_t length, opw_format format, opw_graph** out);
/* edges holds 2*m vertex ids. */
OPW_API opw_status opw_graph_from_edges(int n, const int* edges, size_t m, opw_graph** out);
OPW_API opw_status opw_graph_random_mop(int n, unsigned long long seed, opw_graph** out);
OPW_API void opw_graph_free(opw_graph* g);
OPW_API int opw_graph_order(const opw_graph* g);
OPW_API size_t opw_graph_size(const opw_graph* g);
OPW_API size_t opw_graph_warning_count(const opw_graph* g);
OPW_API const char* opw_graph_warning(const opw_graph* g, size_t i);
/* *out is released with opw_string_free. */
OPW_API opw_status opw_graph_serialize(const opw_graph* g, opw_format format, char** out);
OPW_API void opw_string_free(char* s);

/* ---- queries ---- */
OPW_API opw_status opw_pathwidth(const opw_graph* g, int threads, int* width);
OPW_API opw_status opw_anchored_pathwidth(const opw_graph* g, int vertex, int* width);
OPW_API opw_status opw_is_outerplanar(const opw_graph* g, int* result);

/* ---- commands; each produces a report ---- */
OPW_API opw_status opw_cmd_pw(const opw_graph* g, opw_engine engine, int anchor /* -1: none */, int threads,
                              opw_report** out);
OPW_API opw_status opw_cmd_extract(const opw_graph* g, int k, int M /* 0: default */, opw_report** out);
OPW_API opw_status opw_cmd_ik(const opw_graph* g, int k, opw_report** out);
OPW_API opw_status opw_cmd_mk(int k, int cap, int threads, opw_report** out);
OPW_API opw_status opw_cmd_enum(int n, int iso, opw_format format, opw_report** out);
OPW_API opw_status opw_cmd_witness(int k, const opw_graph* core /* NULL: default */, int verify, opw_report** out);
OPW_API opw_status opw_cmd_verify_paper_table(int kmax, int threads, opw_report** out);
OPW_API opw_status opw_cmd_search_remark(int nmax, int threads, opw_report** out);
OPW_API opw_status opw_cmd_convert(const opw_graph* g, opw_format to, opw_report** out);

/* 1 when every assertion in the report passed. */
OPW_API int opw_report_passed(const opw_report* r);
OPW_API const char* opw_report_text(const opw_report* r);
/* Pretty-printed JSON; include_time = 0 omits wall_time for byte-stable output. */
OPW_API const char* opw_report_json(opw_report* r, int include_time);
/* NULL when the report has no artifact of that name. */
OPW_API const char* opw_report_artifact(const opw_report* r, const char* name);
OPW_API void opw_report_free(opw_report* r);

#ifdef __cplusplus
}
#endif

#endif
