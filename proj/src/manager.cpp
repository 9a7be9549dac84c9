#include "vomas/manager.hpp"

#include "vomas/dsl/compile.hpp"
#include "vomas/eval.hpp"
#include "vomas/validators.hpp"

#include <stdexcept>

namespace vomas {

using namespace dsl;

std::string_view reason_name(TerminationReason r) {
  switch (r) {
    case TerminationReason::completed: return "completed";
    case TerminationReason::halted: return "halted";
    case TerminationReason::aborted: return "aborted";
  }
  return "?";
}

namespace {

std::string predicate_text(const Invariant& inv) {
  return inv.source.empty() ? print_expr(*inv.predicate) : inv.source;
}

}  // namespace

VomasManager::VomasManager(VomasSpec spec, ConsoleAgent& console, std::string run_id)
    : spec_(std::move(spec)), console_(console), run_id_(std::move(run_id)) {
  for (const auto& w : spec_.watches) stats_[w.name];
}

trace::LogEntry VomasManager::entry(std::int64_t tick, std::string name, trace::Payload payload) const {
  return trace::LogEntry{run_id_, tick, std::move(name), std::move(payload)};
}

std::optional<std::vector<ProximityMember>> VomasManager::proximity_members(const Expr& expr, const World& view,
                                                                            std::int64_t tick) const {
  const SetExpr* set = nullptr;
  const Expr* predicate = nullptr;
  std::string binder;
  if (const auto* agg = std::get_if<Aggregate>(&expr.node)) {
    set = &agg->set;
  } else if (const auto* q = std::get_if<Quantifier>(&expr.node)) {
    set = &q->set;
    predicate = q->body.get();
    binder = q->binder;
  }
  if (set == nullptr) return std::nullopt;
  const auto* within = std::get_if<WithinVo>(set);
  if (within == nullptr) return std::nullopt;
  const VoAgentDef* vo = spec_.find_vo(within->vo_name);
  if (vo == nullptr || !vo->spatial()) return std::nullopt;
  return proximity_report(*vo, view, tick, predicate, binder, &spec_).members;
}

TickOutcome VomasManager::evaluate_tick(const World& view, std::int64_t tick) {
  if (halted_) throw std::logic_error("evaluate_tick called after halt");

  TickOutcome out;
  std::vector<ConsoleRecord> echoes;

  for (const auto& w : spec_.watches) {
    if (tick % w.period != 0) continue;
    try {
      EvalContext ctx(view, tick, spec_);
      Value v = eval_expr(*w.expr, ctx);
      auto members = proximity_members(*w.expr, view, tick);
      stats_[w.name].record(v);
      out.entries.push_back(entry(tick, w.name, trace::WatchPayload{std::move(v), std::move(members)}));
    } catch (const EvalError& e) {
      ++eval_failures_;
      out.entries.push_back(entry(tick, w.name, trace::EvalFailurePayload{e.what()}));
    }
  }

  const Invariant* halting = nullptr;
  for (const auto& inv : spec_.invariants) {
    if (inv.scope != InvariantScope::every_tick) continue;
    bool holds = true;
    try {
      EvalContext ctx(view, tick, spec_);
      holds = std::get<bool>(eval_expr(*inv.predicate, ctx));
    } catch (const EvalError& e) {
      ++eval_failures_;
      out.entries.push_back(entry(tick, inv.name, trace::EvalFailurePayload{e.what()}));
      continue;
    }
    if (holds) continue;
    violations_.push_back({inv.name, tick, inv.scope});
    out.entries.push_back(entry(
        tick, inv.name,
        trace::ViolationPayload{inv.name, predicate_text(inv), std::string(scope_name(inv.scope)), std::nullopt}));
    echoes.push_back(console_.emit(tick, Severity::violation, inv.name, predicate_text(inv) + " evaluated false"));
    if (inv.on_violation == ViolationPolicy::halt && halting == nullptr) halting = &inv;
  }

  if (halting != nullptr) {
    halted_ = true;
    out.halt = true;
    echoes.push_back(
        console_.emit(tick, Severity::info, "vomas", "halting run: invariant '" + halting->name + "' violated"));
  }

  for (auto& rec : echoes) {
    out.entries.push_back(entry(tick, rec.name,
                                trace::ConsolePayload{std::string(severity_name(rec.severity)), std::move(rec.message)}));
  }
  return out;
}

std::vector<trace::LogEntry> VomasManager::evaluate_termination(const World& view, std::int64_t tick,
                                                                TerminationReason reason) {
  std::vector<trace::LogEntry> out;
  std::vector<ConsoleRecord> echoes;
  const std::string why(reason_name(reason));

  for (const auto& inv : spec_.invariants) {
    if (inv.scope != InvariantScope::at_termination) continue;
    bool holds = true;
    try {
      EvalContext ctx(view, tick, spec_);
      holds = std::get<bool>(eval_expr(*inv.predicate, ctx));
    } catch (const EvalError& e) {
      ++eval_failures_;
      out.push_back(entry(tick, inv.name, trace::EvalFailurePayload{e.what()}));
      continue;
    }
    if (holds) continue;
    violations_.push_back({inv.name, tick, inv.scope});
    out.push_back(entry(tick, inv.name,
                        trace::ViolationPayload{inv.name, predicate_text(inv), std::string(scope_name(inv.scope)), why}));
    echoes.push_back(console_.emit(tick, Severity::violation, inv.name,
                                   predicate_text(inv) + " evaluated false at termination (" + why + ")"));
  }

  for (auto& rec : echoes) {
    out.push_back(entry(tick, rec.name,
                        trace::ConsolePayload{std::string(severity_name(rec.severity)), std::move(rec.message)}));
  }
  return out;
}

}  // namespace vomas
