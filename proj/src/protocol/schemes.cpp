#include "mihx/protocol/schemes.hpp"

#include <fmt/format.h>

#include <memory>

#include "mihx/codec/message.hpp"

namespace mihx::protocol {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Completed: return "completed";
    case Outcome::HandoverReject: return "HandoverReject";
    case Outcome::UnknownPreviousMag: return "UnknownPreviousMag";
    case Outcome::NoCandidate: return "NoCandidate";
    case Outcome::CommitRejected: return "CommitRejected";
  }
  return "?";
}

int choose_candidate(int m, const std::vector<bool>& available) {
  for (int i = 1; i <= m; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    if (k >= available.size() || available[k]) return i;
  }
  throw ProtocolError(ProtocolErrc::NoCandidate,
                      m == 0 ? "candidate list is empty" : "no candidate has resources");
}

namespace {

using Done = Network::Done;

// MIH message kind names as registered in the codec.
constexpr const char* kLinkGoingDown = "MIH_Link_Going_Down_indication";
constexpr const char* kLinkUp = "MIH_Link_Up_indication";
constexpr const char* kLinkDown = "MIH_Link_Down_indication";
constexpr const char* kInfoReq = "MIH_Get_Information_request";
constexpr const char* kInfoRsp = "MIH_Get_Information_response";
constexpr const char* kCandReq = "MIH_Net_HO_Candidate_Query_request";
constexpr const char* kCandRsp = "MIH_Net_HO_Candidate_Query_response";
constexpr const char* kQueryReq = "MIH_N2N_HO_Query_Resources_request";
constexpr const char* kQueryRsp = "MIH_N2N_HO_Query_Resources_response";
constexpr const char* kMnCommitReq = "MIH_MN_HO_Commit_request";
constexpr const char* kMnCommitRsp = "MIH_MN_HO_Commit_response";
constexpr const char* kNetCommitReq = "MIH_Net_HO_Commit_request";
constexpr const char* kNetCommitRsp = "MIH_Net_HO_Commit_response";
constexpr const char* kN2nCommitReq = "MIH_N2N_HO_Commit_request";
constexpr const char* kN2nCommitRsp = "MIH_N2N_HO_Commit_response";
constexpr const char* kCompleteReq = "MIH_N2N_HO_Complete_request";
constexpr const char* kCompleteRsp = "MIH_N2N_HO_Complete_response";

class Flow {
 public:
  Flow(Network& n, const HandoverOptions& o)
      : net(n), opt(o), mn(n.mn()), smag(n.serving_mag()), tmag(n.candidate(1)),
        lma(n.lma()), miis(n.miis()) {}
  virtual ~Flow() = default;

  RunResult execute() {
    net.start_traffic(opt.traffic_start_ms);
    net.queue().schedule_at(opt.trigger_ms, [this] { start(); });
    net.run();
    return RunResult{outcome, tmag, net.transcript()};
  }

 protected:
  virtual void start() = 0;

  void abort(Outcome o, EntityId at, const std::string& why) {
    outcome = o;
    net.local(at, at, "Handover_Abort", fmt::format("{}: {}", to_string(o), why));
    net.finish();
  }
  void complete() { net.finish(); }

  const MnProfile& profile() const { return net.config().profile; }
  double l_d() const { return net.config().data_size; }

  void after_l2(Done fn) { net.queue().schedule_in(net.config().t_l2_ms, std::move(fn)); }

  void detach(const std::string& note) {
    net.mn_detach();
    net.local(mn, net.access_point(smag), "L2_Handover", note);
  }

  void attach(EntityId mag, const std::string& note) {
    net.mn_attach(mag);
    net.local(mn, net.access_point(mag), "L2_Attach", note);
  }

  /// sMAG <-> MIIS information exchange.
  void miis_exchange(Done next) {
    net.wired(smag, miis, LinkKind::MagMiis, kInfoReq, "M_3", "neighbor network information",
              [this, next = std::move(next)]() mutable {
                net.wired(miis, smag, LinkKind::MagMiis, kInfoRsp, "M_4", "status=0",
                          std::move(next));
              });
  }

  /// Candidate query to the MN.
  void candidate_query(Done next) {
    net.air(smag, mn, kCandReq, "M_5", fmt::format("n={} neighbor networks", net.config().n),
            [this, next = std::move(next)]() mutable {
              net.air(mn, smag, kCandRsp, "M_6",
                      fmt::format("m={} preferred PoAs", net.config().m), std::move(next));
            });
  }

  /// Sequential resource queries to candidates i..m, then the choice.
  void query_resources(int i, Done next) {
    const int m = net.config().m;
    if (i > m) {
      try {
        tmag = net.candidate(choose_candidate(m, opt.candidate_available));
      } catch (const ProtocolError& e) {
        abort(Outcome::NoCandidate, smag, e.what());
        return;
      }
      net.set_target(tmag);
      next();
      return;
    }
    const auto cand = net.candidate(i);
    const auto k = static_cast<std::size_t>(i - 1);
    const bool ok = k >= opt.candidate_available.size() || opt.candidate_available[k];
    net.wired(smag, cand, LinkKind::MagMag, kQueryReq, "M_7", "MN ID, requested resources",
              [this, cand, ok, i, next = std::move(next)]() mutable {
                net.wired(cand, smag, LinkKind::MagMag, kQueryRsp, "M_8",
                          ok ? "status=0 resources available" : "status=0 resources unavailable",
                          [this, i, next = std::move(next)]() mutable {
                            query_resources(i + 1, std::move(next));
                          });
              });
  }

  /// Completion exchange started by the serving MAG; ends the run.
  void serving_complete() {
    net.wired(smag, tmag, LinkKind::MagMag, kCompleteReq, "M_13", "MN ID", [this] {
      net.wired(tmag, smag, LinkKind::MagMag, kCompleteRsp, "M_14", "status=0", [this] {
        net.set_mode(smag, MagMode::Drop);
        net.local(smag, smag, "Release_Resources", "serving MAG releases MN state");
        complete();
      });
    });
  }

  ProxyBindingUpdate pbu(EntityId from, bool transient = false, bool dereg = false) const {
    return ProxyBindingUpdate{profile().mn_id, from, transient, dereg, profile().hnps,
                              dereg ? 0.0 : 3600.0};
  }

  Network& net;
  const HandoverOptions& opt;
  EntityId mn, smag, tmag, lma, miis;
  Outcome outcome = Outcome::Completed;
};

// Standard MIH-assisted PMIPv6 handover (break before make).
class Standard : public Flow {
 public:
  Standard(Network& n, const HandoverOptions& o, bool mobile_initiated)
      : Flow(n, o), mobile_(mobile_initiated) {}

 protected:
  void start() override {
    if (mobile_) {
      info_exchange([this] { candidate_query([this] { query_resources(1, [this] { mn_commit(); }); }); });
    } else {
      candidate_query([this] { info_exchange([this] { query_resources(1, [this] { mn_commit(); }); }); });
    }
  }

 private:
  void info_exchange(Done next) {
    net.air(mn, smag, kInfoReq, "M_3", "neighbor network information",
            [this, next = std::move(next)]() mutable {
              miis_exchange([this, next = std::move(next)]() mutable {
                net.air(smag, mn, kInfoRsp, "M_4", "status=0", std::move(next));
              });
            });
  }

  void mn_commit() {
    net.air(mn, smag, kMnCommitReq, "M_15", fmt::format("target {}", tmag.name()), [this] {
      net.wired(smag, tmag, LinkKind::MagMag, kN2nCommitReq, "M_9", "MN ID", [this] {
        net.wired(tmag, smag, LinkKind::MagMag, kN2nCommitRsp, "M_10", "status=0", [this] {
          net.wired(smag, lma, LinkKind::MagLma, "AAA_Query", "M_17", "AAA co-located with LMA", [this] {
            net.wired(lma, smag, LinkKind::MagLma, "AAA_Reply", "M_18", "authorized", [this] {
              net.proxy_binding(pbu(smag), "pre-registration by serving MAG",
                                [this](const ProxyBindingAck&) { commit_response(); });
            });
          });
        });
      });
    });
  }

  void commit_response() {
    net.air(smag, mn, kMnCommitRsp, "M_16", "status=0", [this] {
      detach("break before make");
      after_l2([this] {
        attach(tmag, "IF-S on target network");
        net.air(mn, tmag, "RS", "M_RS", "", [this] {
          net.set_mode(tmag, MagMode::Hold);
          net.proxy_binding(pbu(tmag), "registration", [this](const ProxyBindingAck&) {
            net.air(tmag, mn, "RA", "M_RA", "home network prefix", [this] { net.flush(tmag); });
            net.wired(tmag, smag, LinkKind::MagMag, kCompleteReq, "M_13", "MN ID", [this] {
              net.wired(smag, tmag, LinkKind::MagMag, kCompleteRsp, "M_14", "status=0", [this] {
                net.set_mode(smag, MagMode::Drop);
                net.proxy_binding(pbu(smag, false, true), "deregistration",
                                  [this](const ProxyBindingAck&) { complete(); });
              });
            });
          });
        });
      });
    });
  }

  bool mobile_;
};

// PMIPv6 fast handover, predictive mode.
class Predictive : public Flow {
 public:
  using Flow::Flow;

 protected:
  void start() override {
    net.set_target(tmag);
    const auto pap = net.access_point(smag);
    const auto nap = net.access_point(tmag);
    net.air_sized(mn, pap, "Report", net.size_of("M_1"),
                  fmt::format("MN ID, new AP ID={}", nap.name()), [this, pap, nap] {
      net.local(pap, smag, "Handover_Indication",
                fmt::format("MN ID, new AP ID={}", nap.name()), net.size_of("M_1"));
      auto ctx = HandoverContext::from_profile(profile(), kFlagP);
      net.wired(smag, tmag, LinkKind::MagMag, "HI", "M_HI",
                fmt::format("flags={}; MN ID, HNP, LMAA, MN LL-ID", ctx.flag_string()), [this] {
        const auto code = opt.hack_code;
        net.wired(tmag, smag, LinkKind::MagMag, "HACK", "M_HACK",
                  fmt::format("flags=P code={}", code), [this, code] {
          if (code >= 128) abort(Outcome::HandoverReject, smag, fmt::format("HAck code {}", code));
        });
        if (code >= 128) return;
        net.set_mode(tmag, MagMode::Buffer);
        const char* flag = opt.predictive_forward ? "F" : "U";
        net.wired(tmag, smag, LinkKind::MagMag, "HI", "M_HI", fmt::format("flags={}", flag),
                  [this] { tunnel(); });
      });
    });
  }

 private:
  void tunnel() {
    net.local(smag, tmag, "Tunnel_Establish", "bidirectional MAG-MAG tunnel");
    if (opt.predictive_forward) {
      net.set_mode(smag, MagMode::Forward, tmag);
    } else {
      net.set_mode(smag, MagMode::Buffer);
    }
    net.when_drained(smag, [this] {
      detach("after drain");
      after_l2([this] {
        attach(tmag, "new AP");
        net.air(mn, tmag, "RS", "M_RS", "IPv6 address configuration", [this] { on_rs(); });
        net.air_sized(mn, tmag, "DATA", static_cast<std::int64_t>(l_d()), "uplink", [this] {
          const auto tl = static_cast<std::int64_t>(l_d() + analytic::kTunnelOverhead);
          net.wired_sized(tmag, smag, LinkKind::MagMag, "DATA", tl, "uplink, reverse tunnel", [this] {
            net.wired_sized(smag, lma, LinkKind::MagLma, "DATA",
                            static_cast<std::int64_t>(l_d()), "uplink", {});
          });
        });
      });
    });
  }

  void on_rs() {
    if (opt.predictive_forward) {
      net.flush(tmag);
    } else {
      net.set_mode(tmag, MagMode::Serve);
      net.wired(tmag, smag, LinkKind::MagMag, "HI", "M_HI", "flags=F; forward buffered packets", [this] {
        net.forward_buffer(smag, tmag);
        net.set_mode(smag, MagMode::Forward, tmag);
      });
    }
    net.proxy_binding(pbu(tmag), "registration", {}, [this] { schedule_teardown(); });
  }

  void schedule_teardown() {
    const double d = net.timing().wired(l_d(), net.config().topology.h_mag_lma);
    net.queue().schedule_in(d, [this] {
      net.set_mode(smag, MagMode::Drop);
      net.local(smag, tmag, "Tunnel_Teardown", "binding moved to new MAG");
      complete();
    });
  }
};

// PMIPv6 fast handover, reactive mode.
class Reactive : public Flow {
 public:
  using Flow::Flow;

 protected:
  void start() override {
    net.set_target(tmag);
    detach("unplanned link loss");
    net.set_mode(smag, MagMode::Buffer);
    after_l2([this] {
      attach(tmag, "new AP");
      net.air_sized(mn, net.access_point(tmag), "Attach", net.size_of("M_UNA"),
                    fmt::format("MN ID, old AP ID={}", opt.old_ap_id), [this] { on_attach(); });
    });
  }

 private:
  void on_attach() {
    auto prev = net.mag_of_access_point(opt.old_ap_id);
    if (!prev || *prev == tmag) {
      abort(Outcome::UnknownPreviousMag, tmag, fmt::format("old AP '{}'", opt.old_ap_id));
      return;
    }
    smag = *prev;
    net.set_mode(tmag, MagMode::Serve);
    const bool fwd = opt.reactive_forward;
    net.wired(tmag, smag, LinkKind::MagMag, "HI", "M_HI", fwd ? "flags=PF; MN ID" : "flags=P; MN ID",
              [this, fwd] {
      net.wired(smag, tmag, LinkKind::MagMag, "HACK", "M_HACK",
                "flags=P code=0; HNP, LMAA, MN LL-ID", [this, fwd] { on_hack(fwd); });
      if (fwd) {
        net.local(smag, tmag, "Tunnel_Establish", "bidirectional MAG-MAG tunnel");
        net.forward_buffer(smag, tmag);
        net.set_mode(smag, MagMode::Forward, tmag);
      } else {
        net.discard_buffer(smag);
        net.set_mode(smag, MagMode::Drop);
      }
    });
  }

  void on_hack(bool fwd) {
    if (fwd) {
      net.air_sized(mn, tmag, "DATA", static_cast<std::int64_t>(l_d()), "uplink", [this] {
        const auto tl = static_cast<std::int64_t>(l_d() + analytic::kTunnelOverhead);
        net.wired_sized(tmag, smag, LinkKind::MagMag, "DATA", tl, "uplink, reverse tunnel", [this] {
          net.wired_sized(smag, lma, LinkKind::MagLma, "DATA", static_cast<std::int64_t>(l_d()),
                          "uplink", {});
        });
      });
      net.proxy_binding(pbu(tmag), "registration", {}, [this] {
        const double d = net.timing().wired(l_d(), net.config().topology.h_mag_lma);
        net.queue().schedule_in(d, [this] {
          net.set_mode(smag, MagMode::Drop);
          net.local(smag, tmag, "Tunnel_Teardown", "binding moved to new MAG");
          complete();
        });
      });
    } else {
      net.proxy_binding(pbu(tmag), "registration", [this](const ProxyBindingAck&) { complete(); });
    }
  }
};

// MIH-assisted fast handover with PMIPv6 bicasting.
class FastMih : public Flow {
 public:
  using Flow::Flow;

 protected:
  void start() override {
    net.air(mn, smag, kLinkGoingDown, "M_1", "IF-S", [this] {
      miis_exchange([this] {
        candidate_query([this] { query_resources(1, [this] { commit(); }); });
      });
    });
  }

 private:
  void commit() {
    net.wired(smag, tmag, LinkKind::MagMag, kN2nCommitReq, "M_9", "MN ID", [this] {
      net.wired(tmag, smag, LinkKind::MagMag, kN2nCommitRsp, "M_10", "status=0", [this] {
        net.wired(smag, tmag, LinkKind::MagMag, "HI", "M_HI",
                  "context transfer: MN ID, HNP, LMAA, MN LL-ID", [this] {
          net.set_mode(tmag, MagMode::Buffer);
          net.wired(tmag, smag, LinkKind::MagMag, "HACK", "M_HACK", "code=0",
                    [this] { net.when_drained(smag, [this] { net_commit(); }); });
          net.proxy_binding(pbu(tmag, true), "transient binding, bicast");
        });
      });
    });
  }

  void net_commit() {
    net.air(smag, mn, kNetCommitReq, "M_11", fmt::format("target {}", tmag.name()), [this] {
      net.air(mn, smag, kNetCommitRsp, "M_12", "status=0", {});
      detach("after drain");
      after_l2([this] {
        attach(tmag, "target network");
        net.local(mn, mn, kLinkUp, "link up on target network");
        net.air(mn, tmag, "RS", "M_RS", "", [this] {
          net.flush(tmag);
          net.air(tmag, mn, "RA", "M_RA", "home network prefix", {});
          net.on_first_native([this] { link_down(); });
          net.proxy_binding(pbu(tmag), "registration");
        });
      });
    });
  }

  void link_down() {
    net.local(mn, smag, kLinkDown, "relayed to serving MAG");
    net.proxy_binding(pbu(smag, false, true), "deregistration", [this](const ProxyBindingAck&) {
      // The target closes the handover once the old binding is gone.
      net.wired(tmag, smag, LinkKind::MagMag, kCompleteReq, "M_13", "MN ID", [this] {
        net.set_mode(smag, MagMode::Drop);
        net.local(smag, smag, "Release_Resources", "serving MAG releases MN state");
        net.wired(smag, tmag, LinkKind::MagMag, kCompleteRsp, "M_14", "status=0",
                  [this] { complete(); });
      });
    });
  }
};

// Integrated handover: extended commit carries the MN context, bicasting
// starts at the target's transient PBU, and UNA releases the buffer.
class Proposed : public Flow {
 public:
  using Flow::Flow;

 protected:
  void start() override {
    auto join = std::make_shared<int>(2);
    auto arrive = [this, join] {
      if (--*join == 0) {
        candidate_query([this] { query_resources(1, [this] { commit(); }); });
      }
    };
    miis_exchange(arrive);
    net.air(mn, smag, kLinkGoingDown, "M_1", "IF-S", arrive);
  }

 private:
  void commit() {
    const auto& p = profile();
    auto req = codec::build_commit_request_ext(p.mn_id, p.lla_iid, p.lmaa, p.hnps, next_tid_++);
    auto octets = codec::encode_message(req);
    net.wired(smag, tmag, LinkKind::MagMag, std::string(codec::kCommitRequestExt), "M_9e",
              fmt::format("MN ID, LLA-IID, LMAA, {} HNP; {} octets encoded", p.hnps.size(),
                          octets.size()),
              [this, octets] { target_commit(octets); });
  }

  void target_commit(const codec::Bytes& octets) {
    const auto ctx = codec::parse_commit_request_ext(codec::decode_message(octets));
    const codec::StatusCode status{opt.commit_status};
    auto rsp = codec::encode_message(codec::build_commit_response_ext(status, next_tid_++));
    net.wired(tmag, smag, LinkKind::MagMag, std::string(codec::kCommitResponseExt), "M_10e",
              fmt::format("status={} ({})", status.value, status.meaning()),
              [this, rsp] { serving_on_response(rsp); });
    if (!status.accepted()) return;
    net.set_mode(tmag, MagMode::Buffer);
    ProxyBindingUpdate u = pbu(tmag, true);
    u.mn_id = ctx.mn_id;
    u.hnps = ctx.hnps;
    net.proxy_binding(u, "transient binding, bicast");
  }

  void serving_on_response(const codec::Bytes& octets) {
    const auto status = codec::parse_status(codec::decode_message(octets));
    if (!status.accepted()) {
      abort(Outcome::CommitRejected, smag,
            fmt::format("status {} ({})", status.value, status.meaning()));
      return;
    }
    net.when_drained(smag, [this] { net_commit(); });
  }

  void net_commit() {
    net.air(smag, mn, kNetCommitReq, "M_11", fmt::format("target {}", tmag.name()), [this] {
      net.air(mn, smag, kNetCommitRsp, "M_12", "status=0 over IF-S", {});
      detach("IF-S released after drain");
      after_l2([this] {
        attach(tmag, "IF-C on target network");
        net.air(mn, tmag, kLinkUp, "M_2", "IF-C", {});
        net.air(mn, tmag, "UNA", "M_UNA", "IF-C", [this] {
          net.flush_on_una(UnaEvent{mn, tmag, net.now()});
          net.on_first_native([this] {
            net.local(mn, smag, kLinkDown, "IF-S, relayed to serving MAG");
            serving_complete();
          });
          net.proxy_binding(pbu(tmag), "registration");
        });
      });
    });
  }

  std::uint16_t next_tid_ = 1;
};

}  // namespace

RunResult run_standard_mobile_init(Network& net, const HandoverOptions& opt) {
  return Standard(net, opt, true).execute();
}
RunResult run_standard_network_init(Network& net, const HandoverOptions& opt) {
  return Standard(net, opt, false).execute();
}
RunResult run_fpmip_predictive(Network& net, const HandoverOptions& opt) {
  return Predictive(net, opt).execute();
}
RunResult run_fpmip_reactive(Network& net, const HandoverOptions& opt) {
  return Reactive(net, opt).execute();
}
RunResult run_fast_handover_mih(Network& net, const HandoverOptions& opt) {
  return FastMih(net, opt).execute();
}
RunResult run_proposed(Network& net, const HandoverOptions& opt) {
  return Proposed(net, opt).execute();
}

RunResult run_scheme(Scheme s, Network& net, const HandoverOptions& opt) {
  switch (s) {
    case Scheme::StandardMobileInit: return run_standard_mobile_init(net, opt);
    case Scheme::StandardNetworkInit: return run_standard_network_init(net, opt);
    case Scheme::FpmipPredictive: return run_fpmip_predictive(net, opt);
    case Scheme::FpmipReactive: return run_fpmip_reactive(net, opt);
    case Scheme::FastHandoverMih: return run_fast_handover_mih(net, opt);
    case Scheme::ProposedIntegrated: return run_proposed(net, opt);
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace mihx::protocol
