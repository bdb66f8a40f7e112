// Copyright 2026 The CKECE Authors.
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

#ifndef CKECE_LOG_HPP_
#define CKECE_LOG_HPP_

#include <spdlog/spdlog.h>

#include <memory>

namespace ckece {

// Library logger writing to stderr. The level comes from the CKECE_LOG
// environment variable (trace, debug, info, warn, error, off); default warn.
std::shared_ptr<spdlog::logger> log();

}  // namespace ckece

#endif  // CKECE_LOG_HPP_
