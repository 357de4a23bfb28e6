/*
 *   Copyright 2026 The abeforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ABEFORGE_ABEFORGE_HPP
#define ABEFORGE_ABEFORGE_HPP

#include <abeforge/term.hpp>
#include <abeforge/statement.hpp>
#include <abeforge/proof.hpp>
#include <abeforge/corpus.hpp>
#include <abeforge/builtin_corpus.hpp>
#include <abeforge/model.hpp>
#include <abeforge/enumerator.hpp>

#endif  // ABEFORGE_ABEFORGE_HPP
