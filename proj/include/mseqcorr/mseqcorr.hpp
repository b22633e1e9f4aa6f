/*
   Copyright 2026 The mseqcorr authors

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

#ifndef MSEQCORR_MSEQCORR_HPP
#define MSEQCORR_MSEQCORR_HPP

#include "arithcorr.hpp"
#include "gf2field.hpp"
#include "gf2poly.hpp"
#include "msequence.hpp"
#include "sweep.hpp"
#include "theorem.hpp"

#endif  // MSEQCORR_MSEQCORR_HPP
