#ifndef CLAUSEN_H
#define CLAUSEN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Clausen function Cl_j(x): the sine sum for even j, the cosine sum
 * for odd j. NaN for j < 1 or non-finite x.
 */
double clausen_cl(int order, double x);

/**
 * S_j(x) = sum_{k>=1} sin(k x)/k^j. NaN for j < 1 or non-finite x.
 */
double clausen_sin_sum(int order, double x);

/**
 * C_j(x) = sum_{k>=1} cos(k x)/k^j. NaN for j < 1, non-finite x, and
 * for j = 1 when x is a multiple of 2 pi.
 */
double clausen_cos_sum(int order, double x);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLAUSEN_H */
