// core/include/cmlab/error.h

// Copyright 2026  The CMLab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CMLAB_ERROR_H_
#define CMLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace cmlab {

// Base class for every error raised by the library. Each concrete type
// corresponds to one failure condition of the public API contract, so callers
// and tests can catch precisely what they expect.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

#define CMLAB_DEFINE_ERROR(NAME)                             \
  class NAME : public Error {                                \
   public:                                                   \
    explicit NAME(const std::string &msg) : Error(msg) {}    \
  }

// audio-io
CMLAB_DEFINE_ERROR(IoError);
CMLAB_DEFINE_ERROR(MalformedWav);
CMLAB_DEFINE_ERROR(UnsupportedFormat);
CMLAB_DEFINE_ERROR(ParseError);
CMLAB_DEFINE_ERROR(DuplicateTrial);

// dsp-frontend
CMLAB_DEFINE_ERROR(TooShort);

// channel-sim
CMLAB_DEFINE_ERROR(RateMismatch);
CMLAB_DEFINE_ERROR(InfeasibleSpec);
CMLAB_DEFINE_ERROR(DuplicateChannelId);
CMLAB_DEFINE_ERROR(EmptyInput);

// neuro
CMLAB_DEFINE_ERROR(ShapeMismatch);

// losses
CMLAB_DEFINE_ERROR(DegenerateEmbedding);
CMLAB_DEFINE_ERROR(LabelOutOfRange);

// trainer
CMLAB_DEFINE_ERROR(MissingChannel);
CMLAB_DEFINE_ERROR(NonFiniteLoss);
CMLAB_DEFINE_ERROR(EmptyDev);
CMLAB_DEFINE_ERROR(InsufficientData);
CMLAB_DEFINE_ERROR(MissingFeature);

// metrics
CMLAB_DEFINE_ERROR(OneClassOnly);
CMLAB_DEFINE_ERROR(DomainError);

// cli / experiment
CMLAB_DEFINE_ERROR(ValidationError);

#undef CMLAB_DEFINE_ERROR

}  // namespace cmlab

#endif  // CMLAB_ERROR_H_
