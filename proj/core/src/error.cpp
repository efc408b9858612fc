/*
   Copyright 2026 The dickson authors

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

#include "dickson/error.hpp"

namespace dickson {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::MTooSmall: return "MTooSmall";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NoGeneratorFound: return "NoGeneratorFound";
    case Errc::Overflow: return "Overflow";
    case Errc::ZeroAlpha: return "ZeroAlpha";
    case Errc::NoPeriodWithinBound: return "NoPeriodWithinBound";
    case Errc::EvenQ: return "EvenQ";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case Errc::BadRange: return "BadRange";
    case Errc::AlphaNotFixed: return "AlphaNotFixed";
    case Errc::DeskBoundExceeded: return "DeskBoundExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace dickson
