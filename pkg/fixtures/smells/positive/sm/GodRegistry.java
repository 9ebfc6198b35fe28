package sm;

public class GodRegistry {

    private HolderA ha;
    private HolderB hb;
    private int cont;
    private int lim;

    public int conferir() {
        if (ha.codigo > 0 && ha.volume >= 0 && cont >= 0 && cont < 99) { cont++; }
        if (cont > 1 && cont > 2 && cont > 3 && cont > 4) { cont--; }
        return cont;
    }
    public int revisar() {
        if (hb.chave > 0 && hb.custo >= 0 && cont >= 0 && cont < 50) { cont++; }
        if (cont > 5 && cont > 6 && cont > 7 && cont > 8) { return hb.chave; }
        return hb.custo;
    }
    public int cortar(HolderA t) {
        if (t.margem > 0 && lim > 0 && lim < 99 && lim != 7) { return lim + 1; }
        if (lim > 1 && lim > 2 && lim > 3 && lim > 4) { return lim - 1; }
        return lim;
    }
    public boolean avaliar(HolderB b) {
        if (b.prazo > 0 && lim > 0 && lim < 120 && lim != 9) { return true; }
        if (lim > 1 && lim > 2 && lim > 3 && lim > 4) { return false; }
        return lim > 5;
    }
    public int resumo(HolderA x) {
        int soma = sinal() + ponto() + ajuste() + custoBase();
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) { return x.tipo; }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) { return soma; }
        return 0;
    }
    private int sinal() { return 1; }
    private int ponto() { return 2; }
    private int ajuste() { return 3; }
    private int custoBase() { return 4; }
}
