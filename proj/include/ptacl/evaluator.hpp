/*
 * Copyright 2026 The ptacl Authors
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

#pragma once

#include "ptacl/ast.hpp"
#include "ptacl/trilogic.hpp"

namespace ptacl {

/// Decision counterparts of the three-valued connectives. Allow plays the
/// role of One, Deny of Zero, NotApp of Bot.
Decision decision_not(Decision d);
Decision decision_dbd(Decision d);
Decision decision_and(Decision a, Decision b);

DecisionSet set_not(DecisionSet s);
DecisionSet set_dbd(DecisionSet s);
DecisionSet set_and(DecisionSet a, DecisionSet b);

/// Evaluate a Ref-free target against a request.
///
/// An atomic target (n, v) yields One when the request carries exactly that
/// pair, Bot when the request carries no pair named n at all, and Zero when
/// it carries n only with other values.
TriValue eval_target(const TargetPtr& t, const Request& q);

/// Evaluate a Ref-free policy against a request. The result is always a
/// nonempty decision set; a Tar node whose target is Bot contributes NotApp
/// alongside every decision its body can reach.
DecisionSet eval_policy(const PolicyPtr& p, const Request& q);

/// Ref-resolving conveniences.
TriValue eval_target(const PolicyEnv& env, const std::string& id,
                     const Request& q);
DecisionSet eval_policy(const PolicyEnv& env, const std::string& id,
                        const Request& q);

}  // namespace ptacl
