// Copyright 2026 chromaq contributors
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

#pragma once

#include "chromaq/esym.hpp"
#include "chromaq/foresttriples.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/kchain.hpp"
#include "chromaq/limits.hpp"
#include "chromaq/llt.hpp"
#include "chromaq/nbc.hpp"
#include "chromaq/oracle.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"
#include "chromaq/scan.hpp"
#include "chromaq/symfunc.hpp"
#include "chromaq/verify.hpp"
