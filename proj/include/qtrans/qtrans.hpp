// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Single include for the whole library.

#ifndef QTRANS_QTRANS_HPP_
#define QTRANS_QTRANS_HPP_

#include "qtrans/classical.hpp"
#include "qtrans/conjecture_lab.hpp"
#include "qtrans/errors.hpp"
#include "qtrans/field.hpp"
#include "qtrans/lattice.hpp"
#include "qtrans/q_transversal.hpp"
#include "qtrans/qmatroid.hpp"
#include "qtrans/representation.hpp"
#include "qtrans/serialize.hpp"
#include "qtrans/subspace.hpp"

#endif  // QTRANS_QTRANS_HPP_
