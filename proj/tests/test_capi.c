/* Exercises the shared library through the C header only. */
#include <stdio.h>
#include <string.h>

#include "lenfact/lenfact.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

int main(void) {
  lf_monoid* m = NULL;
  int flag = -1;
  size_t n = 0;
  int64_t atom[1];
  int64_t x[1] = {12};

  EXPECT(strlen(lf_version()) > 0);
  EXPECT(lf_monoid_from_json("{\"kind\":\"numerical\",\"generators\":[3,2,4]}", &m) == LF_OK);
  EXPECT(m != NULL);
  EXPECT(lf_monoid_atom_count(m) == 2);
  EXPECT(lf_monoid_dim(m) == 1);
  EXPECT(lf_monoid_atom(m, 1, atom, 1) == LF_OK && atom[0] == 3);
  EXPECT(lf_monoid_atom(m, 2, atom, 1) == LF_INVALID_INPUT);
  EXPECT(lf_monoid_rank(m, &n) == LF_OK && n == 1);
  EXPECT(lf_is_factorial(m, &flag) == LF_OK && flag == 0);
  EXPECT(lf_is_half_factorial(m, &flag) == LF_OK && flag == 0);
  EXPECT(lf_is_length_factorial(m, &flag) == LF_OK && flag == 1);
  EXPECT(lf_is_pls(m, &flag) == LF_OK && flag == 1);
  EXPECT(lf_factorization_count(m, x, 1, &n) == LF_OK && n == 3);
  x[0] = 1;
  EXPECT(lf_factorization_count(m, x, 1, &n) == LF_OK && n == 0);
  EXPECT(lf_factorization_count(m, x, 2, &n) == LF_INVALID_INPUT);
  lf_monoid_free(m);

  m = NULL;
  EXPECT(lf_monoid_from_json("{\"kind\":\"numerical\",\"generators\":[]}", &m) == LF_EMPTY_GENERATORS);
  EXPECT(m == NULL);
  EXPECT(strlen(lf_last_error()) > 0);
  EXPECT(lf_monoid_from_json("{\"kind\":\"affine\",\"generators\":[[1],[-1]]}", &m) == LF_NOT_POINTED);
  EXPECT(strcmp(lf_status_name(LF_NOT_POINTED), "NotPointed") == 0);
  EXPECT(lf_monoid_from_json(NULL, &m) == LF_INVALID_INPUT);
  EXPECT(lf_is_factorial(NULL, &flag) == LF_INVALID_INPUT);

  {
    lf_options opt;
    lf_report* r = NULL;
    lf_options_init(&opt);
    opt.format = "json";
    EXPECT(lf_run("classify", "{\"kind\":\"numerical\",\"generators\":[2,3]}", &opt, &r) == LF_OK);
    EXPECT(lf_report_exit_code(r) == 0);
    EXPECT(strstr(lf_report_text(r), "\"report_version\": 1") != NULL);
    lf_report_free(r);

    EXPECT(lf_run("classify", "{", &opt, &r) == LF_OK);
    EXPECT(lf_report_exit_code(r) == 1);
    lf_report_free(r);
  }

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("C API: all checks passed\n");
  return failures ? 1 : 0;
}
