#include "doxa/frames.hpp"

#include <array>

namespace doxa {

char rel_cond_letter(RelCond c) {
  switch (c) {
    case RelCond::Serial: return 'l';
    case RelCond::Reflexive: return 'r';
    case RelCond::Transitive: return 't';
    case RelCond::Symmetric: return 's';
    case RelCond::Euclidean: return 'e';
  }
  return '?';
}

std::string nb_cond_name(NbCond c) {
  switch (c) {
    case NbCond::SerialN: return "l_N";
    case NbCond::ReflexiveN: return "r_N";
    case NbCond::TransitiveN: return "t_N";
    case NbCond::SymmetricN: return "s_N";
    case NbCond::EuclideanN: return "e_N";
  }
  return "?";
}

NbCond nb_counterpart(RelCond c) {
  switch (c) {
    case RelCond::Serial: return NbCond::SerialN;
    case RelCond::Reflexive: return NbCond::ReflexiveN;
    case RelCond::Transitive: return NbCond::TransitiveN;
    case RelCond::Symmetric: return NbCond::SymmetricN;
    case RelCond::Euclidean: return NbCond::EuclideanN;
  }
  return NbCond::SerialN;
}

RelCheck check_relational(const std::vector<WorldSet>& rel, int world_count, RelCond c) {
  switch (c) {
    case RelCond::Serial:
      for (int w = 0; w < world_count; ++w)
        if (rel[w] == 0) return {false, {w}};
      return {};
    case RelCond::Reflexive:
      for (int w = 0; w < world_count; ++w)
        if (!mask_has(rel[w], w)) return {false, {w}};
      return {};
    case RelCond::Transitive:
      for (int w = 0; w < world_count; ++w)
        for (int u : mask_indices(rel[w]))
          if (WorldSet missing = rel[u] & ~rel[w])
            return {false, {w, u, mask_indices(missing)[0]}};
      return {};
    case RelCond::Symmetric:
      for (int w = 0; w < world_count; ++w)
        for (int u : mask_indices(rel[w]))
          if (!mask_has(rel[u], w)) return {false, {w, u}};
      return {};
    case RelCond::Euclidean:
      for (int w = 0; w < world_count; ++w)
        for (int u : mask_indices(rel[w]))
          if (WorldSet missing = rel[w] & ~rel[u])
            return {false, {w, u, mask_indices(missing)[0]}};
      return {};
  }
  return {};
}

namespace {

std::vector<WorldSet> subject_cores(const BeliefModel& m, const NbSubject& s, int world) {
  return s.individual ? m.individual_neighbourhood_core(s.agent, world)
                      : m.neighbourhood_cores(s.group, world);
}

}  // namespace

NbCheck check_neighbourhood(const BeliefModel& m, const NbSubject& subject, NbCond c) {
  int n = m.world_count();
  if (n > kNeighbourhoodWorldCap)
    throw FrameError("neighbourhood conditions quantify over the powerset of worlds; cap is " +
                     std::to_string(kNeighbourhoodWorldCap) + " worlds");

  std::vector<std::vector<WorldSet>> cores(n);
  for (int w = 0; w < n; ++w) cores[w] = subject_cores(m, subject, w);
  auto member = [&](int w, WorldSet u) {
    for (WorldSet core : cores[w])
      if ((core & ~u) == 0) return true;
    return false;
  };
  auto member_mask = [&](WorldSet u) {
    WorldSet out = 0;
    for (int w = 0; w < n; ++w)
      if (member(w, u)) out |= WorldSet{1} << w;
    return out;
  };

  const WorldSet all = m.all_worlds();
  for (WorldSet u = 0; u <= all; ++u) {
    WorldSet in_n = member_mask(u);  // worlds whose neighbourhood contains U
    switch (c) {
      case NbCond::SerialN: {
        WorldSet comp_in_n = member_mask(all & ~u);
        if (WorldSet bad = in_n & comp_in_n) return {false, mask_indices(bad)[0], u};
        break;
      }
      case NbCond::ReflexiveN:
        if (WorldSet bad = in_n & ~u) return {false, mask_indices(bad)[0], u};
        break;
      case NbCond::TransitiveN:
        // {w' | U in N(w')} is exactly in_n read as a world set.
        for (int w : mask_indices(in_n))
          if (!member(w, in_n)) return {false, w, u};
        break;
      case NbCond::SymmetricN: {
        // {w' | complement of U not in N(w')}; must be believed wherever U holds.
        WorldSet comp_in_n = member_mask(all & ~u);
        for (int w : mask_indices(u))
          if (!member(w, all & ~comp_in_n)) return {false, w, u};
        break;
      }
      case NbCond::EuclideanN:
        for (int w : mask_indices(all & ~in_n))
          if (!member(w, all & ~in_n)) return {false, w, u};
        break;
    }
    if (u == all) break;  // avoid wrap-around on the 64-world mask
  }
  return {};
}

namespace {

std::string render_rel_witness(const BeliefModel& m, const std::vector<int>& worlds) {
  std::string out = "(";
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (i) out += ",";
    out += m.world_name(worlds[i]);
  }
  return out + ")";
}

std::string render_set(const BeliefModel& m, WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (int w : mask_indices(s)) {
    if (!first) out += ",";
    out += m.world_name(w);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::vector<PreservationRow> preservation_report(const BeliefModel& m, GroupNotion notion) {
  std::vector<PreservationRow> rows;
  for (Group g : submasks_lex(m.all_agents())) {
    // Which conditions every member satisfies individually.
    std::string shared;
    for (RelCond c : kRelConds) {
      bool all_members = true;
      for (int a : mask_indices(g)) {
        bool ok = notion == GroupNotion::Cautious
                      ? check_relational(m.relation_rows(a), m.world_count(), c).holds
                      : check_neighbourhood(m, NbSubject::Agent(a), nb_counterpart(c)).holds;
        if (!ok) {
          all_members = false;
          break;
        }
      }
      if (all_members) shared += rel_cond_letter(c);
    }

    std::vector<WorldSet> cautious_rows;
    if (notion == GroupNotion::Cautious) {
      cautious_rows.resize(m.world_count());
      for (int w = 0; w < m.world_count(); ++w) cautious_rows[w] = m.cautious_successors(g, w);
    }

    for (RelCond c : kRelConds) {
      if (shared.find(rel_cond_letter(c)) == std::string::npos) continue;
      PreservationRow row;
      row.group = g;
      row.group_text = m.group_name(g);
      row.member_conditions = shared;
      if (notion == GroupNotion::Cautious) {
        row.property = std::string(1, rel_cond_letter(c));
        RelCheck check = check_relational(cautious_rows, m.world_count(), c);
        row.preserved = check.holds;
        if (!check.holds) row.witness = render_rel_witness(m, check.witness);
      } else {
        row.property = nb_cond_name(nb_counterpart(c));
        NbCheck check = check_neighbourhood(m, NbSubject::GroupOf(g), nb_counterpart(c));
        row.preserved = check.holds;
        if (!check.holds)
          row.witness = "w=" + m.world_name(check.world) + " U=" + render_set(m, check.set);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_preservation_report(const std::vector<PreservationRow>& rows) {
  std::string out = "group\tmembers_satisfy\tproperty\tverdict\twitness\n";
  for (const auto& row : rows) {
    out += row.group_text + "\t" + row.member_conditions + "\t" + row.property + "\t" +
           (row.preserved ? "preserved" : "violated") + "\t" +
           (row.witness.empty() ? "-" : row.witness) + "\n";
  }
  return out;
}

namespace {

unsigned cond_mask(const std::set<RelCond>& conds) {
  unsigned m = 0;
  for (RelCond c : conds) {
    switch (c) {
      case RelCond::Serial: m |= 1; break;
      case RelCond::Reflexive: m |= 2; break;
      case RelCond::Transitive: m |= 4; break;
      case RelCond::Symmetric: m |= 8; break;
      case RelCond::Euclidean: m |= 16; break;
    }
  }
  return m;
}

// Names for all 32 combinations; equivalent combinations (the conditions
// they do not list are entailed) collapse to the same logic name.
constexpr std::array<const char*, 32> kClassNames = {
    /* ----- */ "K",    /* l---- */ "D",    /* -r--- */ "T",    /* lr--- */ "T",
    /* --t-- */ "K4",   /* l-t-- */ "KD4",  /* -rt-- */ "S4",   /* lrt-- */ "S4",
    /* ---s- */ "KB",   /* l--s- */ "KDB",  /* -r-s- */ "B",    /* lr-s- */ "B",
    /* --ts- */ "K4B",  /* l-ts- */ "S5",   /* -rts- */ "S5",   /* lrts- */ "S5",
    /* ----e */ "K5",   /* l---e */ "KD5",  /* -r--e */ "S5",   /* lr--e */ "S5",
    /* --t-e */ "K45",  /* l-t-e */ "KD45", /* -rt-e */ "S5",   /* lrt-e */ "S5",
    /* ---se */ "K4B",  /* l--se */ "S5",   /* -r-se */ "S5",   /* lr-se */ "S5",
    /* --tse */ "K4B",  /* l-tse */ "S5",   /* -rtse */ "S5",   /* lrtse */ "S5",
};

}  // namespace

std::string frame_class_name(const std::set<RelCond>& conds) {
  return kClassNames[cond_mask(conds)];
}

std::set<RelCond> parse_frame_class(const std::string& text) {
  static const std::map<std::string, std::string> canonical = {
      {"K", ""},      {"D", "l"},    {"T", "r"},    {"K4", "t"},   {"KB", "s"},
      {"K5", "e"},    {"KD4", "lt"}, {"KDB", "ls"}, {"KD5", "le"}, {"S4", "rt"},
      {"B", "rs"},    {"S5", "re"},  {"K4B", "ts"}, {"K45", "te"}, {"KD45", "lte"},
  };
  std::string letters;
  auto it = canonical.find(text);
  if (it != canonical.end()) {
    letters = it->second;
  } else {
    for (char c : text) {
      if (c == ',' || c == ' ') continue;
      letters += c;
    }
    if (letters.empty()) throw std::invalid_argument("unknown frame class: '" + text + "'");
  }
  std::set<RelCond> out;
  for (char c : letters) {
    switch (c) {
      case 'l': out.insert(RelCond::Serial); break;
      case 'r': out.insert(RelCond::Reflexive); break;
      case 't': out.insert(RelCond::Transitive); break;
      case 's': out.insert(RelCond::Symmetric); break;
      case 'e': out.insert(RelCond::Euclidean); break;
      default:
        throw std::invalid_argument("unknown frame class: '" + text + "'");
    }
  }
  return out;
}

}  // namespace doxa
