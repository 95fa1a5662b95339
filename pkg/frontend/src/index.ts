export {
  SummaryRow,
  parseSummaryCsv,
  columnValue,
  hasColumn,
  CsvError,
  REQUIRED_COLUMNS,
} from "./csv";
export { relPerfColor, relPerfHex, toHex, GREEN, YELLOW, RED, Rgb } from "./color";
export {
  renderChart,
  ChartKind,
  CHART_KINDS,
  ChartOptions,
  ChartError,
  dotArea,
  dotRadius,
  DOT_AREA_MIN,
  DOT_AREA_MAX,
} from "./charts";
