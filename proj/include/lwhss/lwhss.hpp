// Copyright 2026 The lwhss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef LWHSS_LWHSS_HPP_
#define LWHSS_LWHSS_HPP_

#include "lwhss/codes.hpp"
#include "lwhss/combinatorics.hpp"
#include "lwhss/embedding.hpp"
#include "lwhss/error.hpp"
#include "lwhss/field.hpp"
#include "lwhss/hss.hpp"
#include "lwhss/io.hpp"
#include "lwhss/linalg.hpp"
#include "lwhss/rng.hpp"
#include "lwhss/verify.hpp"

#endif  // LWHSS_LWHSS_HPP_
