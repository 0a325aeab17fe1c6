/*
   Copyright 2026 The gorcurves Authors

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

#ifndef GORCURVES_GORCURVES_HPP
#define GORCURVES_GORCURVES_HPP

#include "catalogue.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "geometry.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "io.hpp"
#include "monomial.hpp"
#include "pfaffian.hpp"
#include "polynomial.hpp"
#include "resolution.hpp"
#include "verifier.hpp"

#endif  // GORCURVES_GORCURVES_HPP
