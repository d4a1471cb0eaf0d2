#include "speclab/speclab.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const speclab_output* out, const char* needle) {
  return strstr(speclab_output_text(out), needle) != NULL;
}

static void spectra(void) {
  speclab_output* out = NULL;
  EXPECT(speclab_spectrum("scalar", 3, 4, NULL, SPECLAB_FORMAT_CSV, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "j,eigenvalue,multiplicity\n0,3/4,1\n1,15/4,4\n2,35/4,9\n3,63/4,16\n") == 0);
  EXPECT(speclab_output_passed(out) == 1);
  EXPECT(speclab_output_size(out) == strlen(speclab_output_text(out)));
  speclab_output_free(out);

  EXPECT(speclab_spectrum("dirac", 2, 2, NULL, SPECLAB_FORMAT_CSV, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "j,eigenvalue,multiplicity\n0,1,2\n0,-1,2\n1,2,4\n1,-2,4\n") == 0);
  speclab_output_free(out);

  EXPECT(speclab_spectrum("scalar", 1, 4, NULL, SPECLAB_FORMAT_CSV, &out) == SPECLAB_E_INVALID_ARGUMENT);
  EXPECT(out == NULL);
  EXPECT(strlen(speclab_last_error()) > 0);
  EXPECT(speclab_spectrum("bogus", 3, 4, NULL, SPECLAB_FORMAT_CSV, &out) == SPECLAB_E_INVALID_ARGUMENT);
  EXPECT(speclab_spectrum("scalar", 3, 4, NULL, SPECLAB_FORMAT_CSV, NULL) == SPECLAB_E_NULL_POINTER);
  EXPECT(speclab_spectrum("scalar", 3, 4, NULL, (speclab_format)7, &out) == SPECLAB_E_INVALID_ARGUMENT);

  EXPECT(speclab_truncation(2, 1, 0, SPECLAB_FORMAT_CSV, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "eigenvalue,multiplicity,certified\n1,2,true\n-1,2,true\n2,4,true\n-2,4,true\n") == 0);
  EXPECT(speclab_output_passed(out) == 1);
  speclab_output_free(out);
  EXPECT(speclab_truncation(6, 9, 0, SPECLAB_FORMAT_CSV, &out) == SPECLAB_E_COST_GUARD);
}

static void intertwinors(void) {
  speclab_output* out = NULL;
  EXPECT(speclab_intertwinor("scalar", 4, "1", 2, SPECLAB_FORMAT_CSV, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "level,value,kind\n0,2,exact\n1,6,exact\n2,12,exact\n") == 0);
  speclab_output_free(out);
  EXPECT(speclab_intertwinor("dirac-odd", 0, "1", 3, SPECLAB_FORMAT_CSV, &out) == SPECLAB_OK);
  EXPECT(contains(out, "-3,-24,exact"));
  speclab_output_free(out);
  EXPECT(speclab_intertwinor("dirac", 3, "1/4", 2, SPECLAB_FORMAT_JSON, &out) == SPECLAB_OK);
  EXPECT(contains(out, "\"kind\": \"float\""));
  speclab_output_free(out);
  EXPECT(speclab_intertwinor("residue", 3, "1", 3, SPECLAB_FORMAT_CSV, &out) == SPECLAB_OK);
  EXPECT(contains(out, "residue"));
  speclab_output_free(out);
  EXPECT(speclab_intertwinor("scalar", 4, NULL, 2, SPECLAB_FORMAT_CSV, &out) == SPECLAB_E_INVALID_ARGUMENT);
  EXPECT(speclab_intertwinor("scalar", 4, "1/0", 2, SPECLAB_FORMAT_CSV, &out) != SPECLAB_OK);
  EXPECT(speclab_intertwinor("scalar", 4, "abc", 2, SPECLAB_FORMAT_CSV, &out) == SPECLAB_E_PARSE);
  EXPECT(speclab_intertwinor("dirac", 0, "1/4", 2, SPECLAB_FORMAT_CSV, &out) == SPECLAB_E_INVALID_ARGUMENT);
}

static void verification(void) {
  speclab_output* out = NULL;
  EXPECT(speclab_verify("scalar", 2, 3, 0, 1, SPECLAB_FORMAT_JSON, &out) == SPECLAB_OK);
  EXPECT(speclab_output_passed(out) == 1);
  EXPECT(contains(out, "\"status\": \"pass\""));
  speclab_output_free(out);
  EXPECT(speclab_verify("spinor", 2, 0, 1, 1, SPECLAB_FORMAT_CSV, &out) == SPECLAB_OK);
  EXPECT(speclab_output_passed(out) == 1);
  speclab_output_free(out);
  EXPECT(speclab_verify("all", 7, 99, 2, 1, SPECLAB_FORMAT_JSON, &out) == SPECLAB_E_COST_GUARD);
  EXPECT(strstr(speclab_last_error(), "cost guard") != NULL);
  EXPECT(speclab_verify("nothing", 3, 2, 1, 1, SPECLAB_FORMAT_JSON, &out) == SPECLAB_E_INVALID_ARGUMENT);
}

static void refutation(void) {
  speclab_output* out = NULL;
  EXPECT(speclab_refute("scalar", 3, "2", SPECLAB_FORMAT_TEXT, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "chain [2, 0], 0 < 3/4: violation\n") == 0);
  speclab_output_free(out);
  EXPECT(speclab_refute("scalar", 3, "15/4", SPECLAB_FORMAT_TEXT, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "on spectrum, j=1\n") == 0);
  speclab_output_free(out);
  EXPECT(speclab_refute("scalar", 3, "1/2", SPECLAB_FORMAT_TEXT, &out) == SPECLAB_E_BELOW_BOUND);
  EXPECT(speclab_refute("dirac", 3, "5/2", SPECLAB_FORMAT_TEXT, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "on spectrum, j=1\n") == 0);
  speclab_output_free(out);
  EXPECT(speclab_refute("dirac", 2, "1/2", SPECLAB_FORMAT_TEXT, &out) == SPECLAB_E_BELOW_BOUND);
}

static void polynomials(void) {
  speclab_poly *p = NULL, *q = NULL, *r = NULL;
  speclab_output* out = NULL;
  EXPECT(speclab_poly_parse(2, "x1^2", &p) == SPECLAB_OK);
  EXPECT(speclab_poly_apply(p, "laplacian", &q) == SPECLAB_OK);
  EXPECT(speclab_poly_parse(2, "6*x1^2 - 2", &r) == SPECLAB_OK);
  EXPECT(speclab_poly_equal(q, r) == 1);
  speclab_poly_free(q);
  speclab_poly_free(r);
  EXPECT(speclab_poly_integrate(p, &out) == SPECLAB_OK);
  EXPECT(strcmp(speclab_output_text(out), "1/3") == 0);
  speclab_output_free(out);
  EXPECT(speclab_poly_apply(p, "U3", &q) == SPECLAB_E_INDEX_OUT_OF_RANGE);
  EXPECT(speclab_poly_apply(p, "x0", &q) == SPECLAB_OK);
  EXPECT(speclab_poly_to_string(q, &out) == SPECLAB_OK);
  EXPECT(strlen(speclab_output_text(out)) > 0);
  speclab_output_free(out);
  speclab_poly_free(q);
  speclab_poly_free(p);
  EXPECT(speclab_poly_parse(2, "x1 +", &p) == SPECLAB_E_PARSE);
  EXPECT(p == NULL);
  speclab_poly_free(NULL);
  speclab_output_free(NULL);
}

int main(void) {
  EXPECT(strlen(speclab_version()) > 0);
  EXPECT(strcmp(speclab_status_name(SPECLAB_E_COST_GUARD), "cost_guard") == 0);
  spectra();
  intertwinors();
  verification();
  refutation();
  polynomials();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi: all checks pass\n");
  return 0;
}
