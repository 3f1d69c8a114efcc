/*
 * Copyright 2026 The msws Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* The public header must compile as C and link against the shared library. */

#include <stdio.h>

#include "msws/msws.h"

int main(void) {
  msws_gen* g = NULL;
  if (msws_gen_create_state(0, 0, 0x0000000100000001ULL, &g) != MSWS_OK) {
    fprintf(stderr, "create failed: %s\n", msws_last_error());
    return 1;
  }
  uint32_t first = msws_gen_next32(g);
  uint32_t second = msws_gen_next32(g);
  msws_gen_destroy(g);
  if (first != 0x00000001u || second != 0x00000004u) {
    fprintf(stderr, "unexpected outputs %08x %08x\n", (unsigned)first,
            (unsigned)second);
    return 1;
  }
  puts("ok");
  return 0;
}
