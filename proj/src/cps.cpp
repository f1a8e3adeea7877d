#include "lg/cps.hpp"

namespace lg {

TypeP sequent_target_type(const Sequent& s) {
  if (s.passive()) return t_atom(kResponseAtom);
  if (s.active_out()) return t_neg(t_neg(cps_type(s.active)));
  return t_neg(cps_type(s.active));
}

static void env_of(const StructureP& s, std::map<std::string, TypeP>& out) {
  if (!s) return;
  if (s->kind == SKind::LeafIn) {
    out[s->label] = cps_type(s->formula);
    return;
  }
  if (s->kind == SKind::LeafOut) {
    out[s->label] = t_neg(cps_type(s->formula));
    return;
  }
  env_of(s->a, out);
  env_of(s->b, out);
}

std::map<std::string, TypeP> sequent_env(const Sequent& s) {
  std::map<std::string, TypeP> out;
  env_of(s.left, out);
  env_of(s.right, out);
  return out;
}

namespace {

struct Compiler {
  int next = 0;
  std::string fresh(const char* base) { return std::string(base) + std::to_string(++next); }

  TermP compile(const ProofP& p) {
    const Sequent& c = p->conclusion;
    switch (p->rule.kind) {
      case RK::Ax: {
        std::string k = fresh("k");
        return t_abs(k, t_app(t_var(k), t_var(c.left->label)));
      }
      case RK::CoAx:
        return t_var(c.right->label);
      case RK::AxLink:
        return t_app(t_var(c.right->label), t_var(c.left->label));
      case RK::Cut:
        return t_app(compile(p->premises[0]), compile(p->premises[1]));
      case RK::Mu:
      case RK::MuTilde:
        return t_abs(p->rule.name, compile(p->premises[0]));
      case RK::Focus:
        return t_app(compile(p->premises[0]), t_var(p->rule.name));
      case RK::Structural:
        return compile(p->premises[0]);
      case RK::Logical:
        return logical(p);
    }
    throw ProofError("cps: unknown rule");
  }

  TermP logical(const ProofP& p) {
    const Sequent& prem0 = p->premises[0]->conclusion;
    bool left = p->rule.left;
    switch (p->rule.conn) {
      case FKind::Prod:
      case FKind::Coprod:
        throw ProofError("UnsupportedRule: logical " + std::string(p->rule.conn == FKind::Prod ? "*" : "+") +
                         " has no CPS image");
      case FKind::Under:
      case FKind::Over: {
        if (!left) {
          // \R, /R: premise X |- (x:A).\.(b':B) resp. X |- (b':C)./.(x:D)
          const StructureP& st = prem0.right;
          std::string xl = p->rule.conn == FKind::Under ? st->a->label : st->b->label;
          std::string bl = p->rule.conn == FKind::Under ? st->b->label : st->a->label;
          std::string h = fresh("h");
          return t_abs(h, t_app(t_var(h), t_abs(bl, t_abs(xl, compile(p->premises[0])))));
        }
        // \L, /L: premises M : X |- [A], K : [B] |- Y
        std::string u = fresh("u");
        TermP M = compile(p->premises[0]);
        TermP K = compile(p->premises[1]);
        return t_abs(u, t_app(M, t_app(t_var(u), K)));
      }
      case FKind::RDiff:
      case FKind::LDiff: {
        if (left) {
          // (/)L, (\)L: premise (x:A).(/).(b':B) |- Y resp. (b':l).(\).(x:r) |- Y
          const StructureP& st = prem0.left;
          std::string xl = p->rule.conn == FKind::RDiff ? st->a->label : st->b->label;
          std::string bl = p->rule.conn == FKind::RDiff ? st->b->label : st->a->label;
          std::string h = fresh("h");
          return t_abs(h, t_app(t_var(h), t_abs(bl, t_abs(xl, compile(p->premises[0])))));
        }
        // (/)R, (\)R: premises M : X |- [A], K : [B] |- Y; lift of the L-shape
        std::string k = fresh("k");
        std::string u = fresh("u");
        TermP M = compile(p->premises[0]);
        TermP K = compile(p->premises[1]);
        return t_abs(k, t_app(t_var(k), t_abs(u, t_app(M, t_app(t_var(u), K)))));
      }
      case FKind::DGalR:
      case FKind::DGalL: {
        if (!left) {
          // ^1.R, .^1R: premise K : [A] |- Y
          std::string k = fresh("k");
          return t_abs(k, t_app(t_var(k), compile(p->premises[0])));
        }
        // ^1.L, .^1L: premise (a':A)^1. |- Y; binds the covariable
        const StructureP& st = prem0.left;
        return t_abs(st->a->label, compile(p->premises[0]));
      }
      case FKind::GalR:
      case FKind::GalL: {
        if (!left) {
          // ^0.R, .^0R: premise X |- (x:A)^0.; binds the variable under a lift
          const StructureP& st = prem0.right;
          std::string k = fresh("k");
          return t_abs(k, t_app(t_var(k), t_abs(st->a->label, compile(p->premises[0]))));
        }
        // ^0.L, .^0L: the identity transformation
        return compile(p->premises[0]);
      }
      default:
        throw ProofError("cps: bad logical rule");
    }
  }
};

}  // namespace

TermP cps_proof_raw(const ProofP& p) {
  Compiler c;
  return c.compile(p);
}

TypedTerm cps_proof(const ProofP& p, bool normalize) {
  TypedTerm out;
  out.term = cps_proof_raw(p);
  if (normalize) out.term = beta_normalize(out.term);
  out.type = sequent_target_type(p->conclusion);
  out.free_env = sequent_env(p->conclusion);
  return out;
}

}  // namespace lg
