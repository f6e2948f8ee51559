// Copyright 2026 The seqbell Authors
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

#pragma once

#include "seqbell/errors.hpp"
#include "seqbell/qcore.hpp"
#include "seqbell/models.hpp"
#include "seqbell/instruments.hpp"
#include "seqbell/bell.hpp"
#include "seqbell/closedform.hpp"
#include "seqbell/certify.hpp"
#include "seqbell/optimize.hpp"
#include "seqbell/oracle.hpp"
#include "seqbell/io.hpp"
