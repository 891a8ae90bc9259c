/*
   Copyright 2026 The skl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Everything except workspace.hpp, which pulls in nlohmann/json.

#ifndef SKL_SKL_HPP
#define SKL_SKL_HPP

#include "algebra.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "fxlinalg.hpp"
#include "matrix.hpp"
#include "modact.hpp"
#include "skewlaurent.hpp"
#include "skewmap.hpp"
#include "skewpoly.hpp"
#include "skewseries.hpp"
#include "text.hpp"
#include "worked.hpp"

#endif
