#include "hilbsplit/words.hpp"

#include <algorithm>
#include <functional>

namespace hilbsplit {

namespace {

const char* segmentText(Segment s) {
  switch (s) {
    case Segment::AUp: return "au";
    case Segment::AHatUp: return "Au";
    case Segment::AAUp: return "aau";
    case Segment::AA: return "aa";
    case Segment::AHat: return "A";
  }
  return "";
}

int segmentLetters(Segment s) {
  switch (s) {
    case Segment::AUp:
    case Segment::AHatUp:
    case Segment::AHat: return 1;
    case Segment::AAUp:
    case Segment::AA: return 2;
  }
  return 0;
}

// Enumeration order: a^ < A^ < aa^ in zone 1 and aa < A in zone 2; words are
// listed descending segment-lexicographically.
int segmentCode(Segment s) {
  switch (s) {
    case Segment::AUp: return 0;
    case Segment::AHatUp: return 1;
    case Segment::AAUp: return 2;
    case Segment::AA: return 3;
    case Segment::AHat: return 4;
  }
  return -1;
}

std::vector<int> wordCodes(const FullWord& w) {
  std::vector<int> codes;
  for (Segment s : w.zone1) codes.push_back(segmentCode(s));
  for (Segment s : w.zone2) codes.push_back(segmentCode(s));
  if (w.trailingA) codes.push_back(5);
  return codes;
}

void arrangements(const std::vector<std::pair<Segment, int>>& multiset,
                  std::vector<Segment>& prefix,
                  std::vector<std::vector<Segment>>& out) {
  bool exhausted = true;
  for (std::size_t i = 0; i < multiset.size(); ++i) {
    if (multiset[i].second == 0) continue;
    exhausted = false;
    auto reduced = multiset;
    --reduced[i].second;
    prefix.push_back(multiset[i].first);
    arrangements(reduced, prefix, out);
    prefix.pop_back();
  }
  if (exhausted) out.push_back(prefix);
}

std::vector<std::vector<Segment>> zoneArrangements(
    std::vector<std::pair<Segment, int>> multiset) {
  std::vector<std::vector<Segment>> out;
  std::vector<Segment> prefix;
  arrangements(multiset, prefix, out);
  return out;
}

}  // namespace

int FullWord::letterCount() const {
  int n = trailingA ? 1 : 0;
  for (Segment s : zone1) n += segmentLetters(s);
  for (Segment s : zone2) n += segmentLetters(s);
  return n;
}

std::string FullWord::str() const {
  std::string out;
  for (Segment s : zone1) out += segmentText(s);
  for (Segment s : zone2) out += segmentText(s);
  if (trailingA) out += 'a';
  return out;
}

RawWord RawWord::fromString(const std::string& text) {
  for (char c : text)
    if (c != 'a' && c != 'A' && c != 'u')
      throw Error(std::string("invalid word character '") + c + "'");
  if (!text.empty() && text.front() == 'u') throw Error("word must not start with an arrow");
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == 'u' && text[i + 1] == 'u') throw Error("word has two consecutive arrows");
  return RawWord{text};
}

int RawWord::letterCount() const {
  int n = 0;
  for (char c : letters)
    if (c != 'u') ++n;
  return n;
}

std::vector<FullWord> enumerateFullWords(const StratumLabel& label, int n) {
  if (!label.isValid(n)) throw Error("invalid stratum label " + label.str());
  const int s = label.s, t = label.t;
  const bool plus1 = label.flag == StratumFlag::Plus1;
  // #A^ + #aa^ = s, #a^ + #aa^ + #aa = t, #aa + #A = zone-2 letter budget.
  const int zone2Budget = plus1 ? (label.u == 0 ? 0 : label.u - 1) : label.u;

  std::vector<FullWord> words;
  for (int nAAUp = 0; nAAUp <= std::min(s, t); ++nAAUp) {
    const int nAHatUp = s - nAAUp;
    for (int nAA = 0; nAA <= std::min(zone2Budget, t - nAAUp); ++nAA) {
      const int nAUp = t - nAAUp - nAA;
      const int nAHat = zone2Budget - nAA;
      if (nAUp < 0 || nAHat < 0) continue;
      const auto zone1s = zoneArrangements(
          {{Segment::AUp, nAUp}, {Segment::AHatUp, nAHatUp}, {Segment::AAUp, nAAUp}});
      const auto zone2s = zoneArrangements({{Segment::AA, nAA}, {Segment::AHat, nAHat}});
      for (const auto& z1 : zone1s)
        for (const auto& z2 : zone2s) words.push_back(FullWord{z1, z2, plus1});
    }
  }
  for (const auto& w : words)
    if (w.letterCount() != n) throw Error("internal: word letter count mismatch");
  std::sort(words.begin(), words.end(), [](const FullWord& a, const FullWord& b) {
    return wordCodes(a) > wordCodes(b);
  });
  return words;
}

RawWord flatten(const FullWord& word) {
  return RawWord::fromString(word.str());
}

std::set<std::string> toFacet(const RawWord& word) {
  std::set<std::string> out;
  int letterIndex = 0;
  for (char c : word.letters) {
    if (c == 'u') {
      out.insert("b" + std::to_string(letterIndex));
      continue;
    }
    ++letterIndex;
    if (c == 'a') out.insert("a" + std::to_string(letterIndex));
  }
  return out;
}

std::set<std::string> toFacet(const FullWord& word) {
  return toFacet(flatten(word));
}

RawWord wordFromSubset(const std::set<std::string>& subset, int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    out += subset.count("a" + std::to_string(i)) ? 'a' : 'A';
    if (subset.count("b" + std::to_string(i))) out += 'u';
  }
  return RawWord::fromString(out);
}

namespace {

struct ZoneSplit {
  std::string zone1;  // through the last arrow (inclusive); empty if no arrow
  std::string zone2;  // letters only
};

ZoneSplit splitZones(const RawWord& w) {
  const std::size_t lastArrow = w.letters.rfind('u');
  if (lastArrow == std::string::npos) return {"", w.letters};
  return {w.letters.substr(0, lastArrow + 1), w.letters.substr(lastArrow + 1)};
}

// Zone-1 validity: each run of letters between arrows must be a, A, or aa.
bool zone1Valid(const std::string& zone1) {
  std::string run;
  for (char c : zone1) {
    if (c == 'u') {
      if (!(run == "a" || run == "A" || run == "aa")) return false;
      run.clear();
    } else {
      run += c;
    }
  }
  return run.empty();
}

// Zone-2 validity: every maximal a-run immediately before an A has even
// length; the final run's parity decides a lone trailing a.
bool zone2Valid(const std::string& zone2) {
  int run = 0;
  for (char c : zone2) {
    if (c == 'a') {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return true;
}

FullWord assembleFullWord(const std::string& zone1, const std::string& zone2) {
  FullWord out;
  std::string run;
  for (char c : zone1) {
    if (c == 'u') {
      if (run == "a")
        out.zone1.push_back(Segment::AUp);
      else if (run == "A")
        out.zone1.push_back(Segment::AHatUp);
      else if (run == "aa")
        out.zone1.push_back(Segment::AAUp);
      else
        throw Error("internal: malformed zone 1");
      run.clear();
    } else {
      run += c;
    }
  }
  int aRun = 0;
  for (char c : zone2) {
    if (c == 'a') {
      ++aRun;
      if (aRun == 2) {
        out.zone2.push_back(Segment::AA);
        aRun = 0;
      }
    } else {
      if (aRun != 0) throw Error("internal: malformed zone 2");
      out.zone2.push_back(Segment::AHat);
    }
  }
  out.trailingA = (aRun == 1);
  return out;
}

StratumLabel labelOfFullWord(const FullWord& w) {
  int nAUp = 0, nAHatUp = 0, nAAUp = 0, nAA = 0, nAHat = 0;
  for (Segment s : w.zone1) {
    if (s == Segment::AUp) ++nAUp;
    if (s == Segment::AHatUp) ++nAHatUp;
    if (s == Segment::AAUp) ++nAAUp;
  }
  for (Segment s : w.zone2) {
    if (s == Segment::AA) ++nAA;
    if (s == Segment::AHat) ++nAHat;
  }
  StratumLabel label;
  label.s = nAHatUp + nAAUp;
  label.t = nAUp + nAAUp + nAA;
  const int zone2Letters = nAA + nAHat;
  if (w.trailingA) {
    label.flag = StratumFlag::Plus1;
    label.u = zone2Letters == 0 ? 0 : zone2Letters + 1;
  } else {
    label.flag = StratumFlag::Plus0;
    label.u = zone2Letters;
  }
  return label;
}

}  // namespace

WordClassification classifyWord(const RawWord& word) {
  const ZoneSplit z = splitZones(word);
  if (zone1Valid(z.zone1) && zone2Valid(z.zone2)) {
    const FullWord fw = assembleFullWord(z.zone1, z.zone2);
    return {true, labelOfFullWord(fw)};
  }
  return {false, labelOfFullWord(fillUp(word))};
}

FullWord fillUp(const RawWord& word) {
  const ZoneSplit z = splitZones(word);

  // Zone 1: insert an arrow at the first spot where the word fails.
  std::string fixed1;
  std::string run;
  auto flushRun = [&](char next) {
    // run + next would break segment shape; close the current run with 'u'.
    if (run == "A" || run == "aa" || (run == "a" && next == 'A')) {
      fixed1 += run;
      fixed1 += 'u';
      run.clear();
    }
  };
  for (char c : z.zone1) {
    if (c == 'u') {
      fixed1 += run;
      fixed1 += 'u';
      run.clear();
    } else {
      flushRun(c);
      run += c;
    }
  }
  if (!run.empty()) throw Error("internal: zone 1 must end with an arrow");

  // Zone 2: flip A to a wherever the preceding a-run has odd length.
  std::string fixed2;
  int aRun = 0;
  for (char c : z.zone2) {
    if (c == 'a') {
      ++aRun;
      fixed2 += 'a';
    } else if (aRun % 2 != 0) {
      fixed2 += 'a';  // fill-up flip
      ++aRun;
    } else {
      fixed2 += 'A';
      aRun = 0;
    }
  }

  return assembleFullWord(fixed1, fixed2);
}

}  // namespace hilbsplit
