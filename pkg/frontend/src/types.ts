/** JSON document shapes served by the lab API and the offline bundle. */

export interface Rational {
  num: number;
  den: number;
}

export interface MarkDoc {
  scale: "fixed" | "moving";
  axis_pos: Rational;
  tier: "major" | "minor";
  label: string | null;
}

export interface SpecDoc {
  kind: string;
  display_name: string;
  dimension: string;
  least_count: Rational;
  least_count_display: Rational;
  range_max_ticks: number;
  main_division_ticks: number;
  display_unit: string;
  display_decimals: number;
  vernier_divisions: number | null;
  divisions_per_revolution: number | null;
}

export interface TemplateDoc {
  kind: string;
  layout: "linear" | "circular";
  fixed_marks: MarkDoc[];
  moving_marks: MarkDoc[];
  pointer: MarkDoc[];
  metadata: SpecDoc;
}

export interface TransformDoc {
  kind: "translation" | "rotation";
  unit: string;
  amount: Rational;
  revolution_amount?: Rational;
}

export interface IssueDoc {
  exercise_id: string;
  kind: string;
  transform: TransformDoc;
}

export interface GradeDoc {
  verdict: "correct" | "incorrect";
  message: string;
  correct_value?: string;
}

export interface StatsBlock {
  attempts: number;
  correct: number;
  accuracy: number;
}

export interface StatsDoc {
  session_id: string;
  overall: StatsBlock;
  per_kind: Record<string, StatsBlock>;
}

/** Injected by the lab page before the bundle loads. */
export interface LabConfig {
  kind: string;
  offline: boolean;
  apiBase: string | null;
  templateUrl: string | null;
}
