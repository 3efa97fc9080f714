/*
   Copyright 2026 The cremona Authors

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

// Umbrella header.

#ifndef CREMONA_CREMONA_HPP
#define CREMONA_CREMONA_HPP

#include "cremona/dynamics.hpp"
#include "cremona/error.hpp"
#include "cremona/families.hpp"
#include "cremona/field.hpp"
#include "cremona/gcd.hpp"
#include "cremona/poly.hpp"
#include "cremona/ratmap.hpp"
#include "cremona/report.hpp"

#endif
