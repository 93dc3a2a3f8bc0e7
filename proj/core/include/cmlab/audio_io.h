// core/include/cmlab/audio_io.h

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

#ifndef CMLAB_AUDIO_IO_H_
#define CMLAB_AUDIO_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmlab::audio {

inline constexpr int kCanonicalRateHz = 16000;

// Mono audio in [-1, 1]. The unit flowing through I/O, channel simulation and
// feature extraction.
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = kCanonicalRateHz;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

enum class Key { kBonafide, kSpoof };

const char *key_name(Key k);
Key key_from_string(const std::string &s);  // throws ParseError

// The reserved channel token for un-shifted data.
inline constexpr const char *kOrigChannel = "orig";

struct TrialRecord {
  std::string trial_id;
  std::string speaker_id;
  std::string audio_path;
  Key key = Key::kBonafide;
  std::optional<std::string> attack_id;  // none for bona fide
  std::string channel_id = kOrigChannel;
};

enum class Split { kTrain, kDev, kEval };

const char *split_name(Split s);

struct Manifest {
  std::vector<TrialRecord> records;
  Split split = Split::kTrain;

  std::size_t size() const { return records.size(); }
};

// Reads a RIFF/WAVE PCM16 mono file; samples are scaled by 1/32768.
// required_rate_hz > 0 rejects any other sample rate (UnsupportedFormat).
// Throws MalformedWav on a broken container, UnsupportedFormat on non-PCM16
// or multichannel content.
Waveform read_wav(const std::string &path, int required_rate_hz = 0);

// Writes PCM16 mono. Samples outside [-1, 1] are clipped with a warning to
// stderr; quantization is round-to-nearest, saturating at 32767.
void write_wav(const Waveform &w, const std::string &path);

// Parses an ASVspoof-style protocol file:
//   speaker_id trial_id ignored attack_id key [channel_id]
// one trial per line, whitespace-delimited. attack_id "-" maps to none; key
// must be the literal "bonafide" or "spoof". The optional sixth field is the
// channel token written by the channel simulator; absent means "orig".
// audio_path is resolved as <audio_root>/<trial_id>.wav. When verify_audio is
// set, a missing audio file raises IoError naming the path.
Manifest parse_protocol(const std::string &path, const std::string &audio_root,
                        Split split, bool verify_audio = true);

// Inverse of parse_protocol; emits the sixth field when with_channel is set.
void write_protocol(const Manifest &m, const std::string &path,
                    bool with_channel = false);

}  // namespace cmlab::audio

#endif  // CMLAB_AUDIO_IO_H_
