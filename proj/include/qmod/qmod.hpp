// Copyright 2026 The qmod Authors
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

#include "qmod/circuit.hpp"
#include "qmod/errors.hpp"
#include "qmod/gate.hpp"
#include "qmod/layout.hpp"
#include "qmod/modarith.hpp"
#include "qmod/operator_spec.hpp"
#include "qmod/oracle.hpp"
#include "qmod/qft.hpp"
#include "qmod/resources.hpp"
#include "qmod/shor.hpp"
#include "qmod/statevector.hpp"
#include "qmod/text_format.hpp"
#include "qmod/verify.hpp"
