// Copyright 2026 The corrdist Authors
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

#ifndef CORRDIST_CORRDIST_HPP
#define CORRDIST_CORRDIST_HPP

#include "corrdist/barycenter.hpp"
#include "corrdist/clustering.hpp"
#include "corrdist/csv.hpp"
#include "corrdist/diagnostics.hpp"
#include "corrdist/eigen_symmetric.hpp"
#include "corrdist/error.hpp"
#include "corrdist/matrix.hpp"
#include "corrdist/metric.hpp"
#include "corrdist/random.hpp"
#include "corrdist/standardize.hpp"

#endif // CORRDIST_CORRDIST_HPP
