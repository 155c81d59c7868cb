#include <stdio.h>
#include <string.h>

#include "tatecoh/tatecoh.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void table_dims(tc_table* t, int lo, int hi, const size_t* want) {
  for (int n = lo; n <= hi; ++n) {
    size_t d = 99;
    EXPECT(tc_table_dim(t, n, &d) == TC_OK);
    EXPECT(d == want[n - lo]);
  }
}

int main(void) {
  tc_input* in = NULL;
  EXPECT(tc_input_load("builtin:sweedler", &in) == TC_OK);
  EXPECT(tc_input_dim(in) == 4);
  EXPECT(tc_input_is_hopf(in));

  int valid = 0;
  char* report = NULL;
  EXPECT(tc_input_validate(in, &valid, &report) == TC_OK);
  EXPECT(valid == 1);
  tc_string_free(report);

  char* info = NULL;
  EXPECT(tc_input_info(in, TC_FORMAT_TEXT, &info) == TC_OK);
  EXPECT(strstr(info, "alpha(g) = -1") != NULL);
  EXPECT(strstr(info, "nu(g) = -g") != NULL);
  EXPECT(strstr(info, "nu^2 = 1: yes") != NULL);
  tc_string_free(info);

  tc_module* k = NULL;
  EXPECT(tc_module_trivial(in, &k) == TC_OK);
  EXPECT(tc_module_dim(k) == 1);
  tc_table* t = NULL;
  EXPECT(tc_tate_cohomology(in, k, -3, 3, TC_ENGINE_FREE, &t) == TC_OK);
  const size_t even[] = {0, 1, 0, 1, 0, 1, 0};
  table_dims(t, -3, 3, even);
  int lo = 0, hi = 0;
  EXPECT(tc_table_range(t, &lo, &hi) == TC_OK);
  EXPECT(lo == -3 && hi == 3);
  size_t d = 0;
  EXPECT(tc_table_dim(t, 7, &d) != TC_OK);
  char* json = NULL;
  EXPECT(tc_table_render(t, TC_FORMAT_JSON, 1, &json) == TC_OK);
  EXPECT(strstr(json, "\"rows\"") != NULL);
  tc_string_free(json);
  tc_table_free(t);

  EXPECT(tc_tate_spliced(in, -2, 2, &t) == TC_OK);
  table_dims(t, -2, 2, even + 1);
  tc_table_free(t);

  EXPECT(tc_tate_hochschild(in, -1, 1, TC_ENGINE_MINIMAL, &t) == TC_OK);
  const size_t ones[] = {1, 1, 1};
  table_dims(t, -1, 1, ones);
  tc_table_free(t);

  tc_check_status st = TC_CHECK_FAIL;
  EXPECT(tc_check(in, "theorem", -2, 2, 4, TC_FORMAT_TEXT, &st, &report) == TC_OK);
  EXPECT(st == TC_CHECK_PASS);
  tc_string_free(report);
  EXPECT(tc_check(in, "bogus", -2, 2, 4, TC_FORMAT_TEXT, &st, NULL) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(tc_last_error_message()) > 0);

  char* cup = NULL;
  EXPECT(tc_cup(in, 2, 2, TC_FORMAT_TEXT, &cup) == TC_OK);
  EXPECT(strstr(cup, "e0 * e0 = [1]") != NULL);
  tc_string_free(cup);

  char* text = NULL;
  EXPECT(tc_input_export(in, &text) == TC_OK);
  tc_input* again = NULL;
  EXPECT(tc_input_from_json(text, &again) == TC_OK);
  EXPECT(tc_input_dim(again) == 4);
  tc_input_free(again);
  tc_string_free(text);

  tc_module_free(k);
  tc_input_free(in);

  tc_input* taft = NULL;
  EXPECT(tc_input_load("builtin:taft3", &taft) == TC_OK);
  EXPECT(tc_check(taft, "symmetry", -2, 2, 4, TC_FORMAT_TEXT, &st, NULL) == TC_OK);
  EXPECT(st == TC_CHECK_SKIP);
  tc_input_free(taft);

  tc_input* plain = NULL;
  EXPECT(tc_input_load("builtin:dual_q", &plain) == TC_OK);
  EXPECT(!tc_input_is_hopf(plain));
  EXPECT(tc_module_trivial(plain, &k) == TC_ERR_NOT_HOPF);
  tc_input_free(plain);

  EXPECT(tc_input_from_json("{", &plain) == TC_ERR_PARSE);
  EXPECT(strcmp(tc_status_name(TC_ERR_PARSE), "ParseError") == 0);
  EXPECT(tc_input_load(NULL, &plain) == TC_ERR_INVALID_ARGUMENT);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  return failures ? 1 : 0;
}
