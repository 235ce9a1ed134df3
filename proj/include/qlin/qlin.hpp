/*
   Copyright 2026 The qlin Authors

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

// Umbrella header for the algebra core. JSON helpers live in qlin/json.hpp.

#ifndef QLIN_QLIN_HPP
#define QLIN_QLIN_HPP

#include "codes.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "fieldcore.hpp"
#include "funcfield.hpp"
#include "matrix.hpp"
#include "minimal.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "qpoly.hpp"
#include "specialize.hpp"

#endif
