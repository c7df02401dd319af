/*
   Copyright 2026 The lwcert authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace lw {

/// Base class of every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (zero divisor, wrong degree, ...).
struct domain_error : error {
    using error::error;
};

/// A box or hint selects no root, or more than one, and cannot be refined.
struct ambiguity_error : domain_error {
    using domain_error::domain_error;
};

/// A combinatorial size cap was exceeded.
struct size_error : error {
    using error::error;
};

/// The precision ceiling was reached without meeting the requested target.
struct precision_error : error {
    using error::error;
};

/// An exact identity guaranteed by the construction failed to hold.
struct consistency_error : error {
    using error::error;
};

/// A prime sweep produced no qualifying certificate.
struct no_certificate_error : error {
    using error::error;
};

} // namespace lw
